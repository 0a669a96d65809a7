"""The sequences P_n, Q_n, R_n and the partial gamma sum G_k.

P_n(z) = (z - n) P_{n-1}(z) + 1,  P_0 = 1, with explicit form
    P_n(z) = 1 + sum_{j=0}^{n-1} prod_{i=0}^{j} (z - n + i).

Q_n and R_n share the three-term recurrence
    Y_n = (z - n + 2)/(z - n + 1) Y_{n-1} - 1/(z - n + 1) Y_{n-2}
with seeds Q_1 = (z + 1)/z, Q_2 = z/(z - 1), R_1 = 1/z, R_2 = 1/(z - 1), and
    R_n(z) = sum_{j=0}^{n-1} prod_{i=0}^{j} 1/(z - i),   Q_n = 1 + R_n.

They connect K at z and z - n:
    K(z) = K(z - n) + (P_n(z) - 1) Gamma(z - n)
         = K(z - n) + R_n(z) Gamma(z + 1).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from numbers import Number

from .errors import DomainError, SingularArgument
from .gamma_core import as_complex, as_real, gamma, gamma_real
from .kurepa_eval import kurepa

SINGULAR_TOLERANCE = 1e-12


class Family(str, enum.Enum):
    P = "P"
    Q = "Q"
    R = "R"
    G = "G"

    def __str__(self):
        return self.value


class Route(str, enum.Enum):
    RECURRENCE = "Recurrence"
    EXPLICIT = "Explicit"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SequenceEval:
    family: Family
    n: int
    z: complex
    value: complex
    route: Route


def _arg(z):
    # keep real input real so that the bounds module works in floats
    if isinstance(z, complex):
        return as_complex(z)
    return as_real(z)


def _check_index(n, minimum):
    if isinstance(n, bool) or not isinstance(n, int) or n < minimum:
        raise DomainError(f"sequence index must be an integer >= {minimum}, got {n!r}")


def _check_singular(n, z):
    # rational sequences are singular on {0, 1, ..., n-1}
    k = round(z.real)
    if 0 <= k <= n - 1 and abs(z - k) <= SINGULAR_TOLERANCE:
        raise SingularArgument(f"z = {z} collides with the pole {k} of the index-{n} sequence")


def _p_recurrence(n, z):
    p = 1.0
    for m in range(1, n + 1):
        p = (z - m) * p + 1.0
    return p


def _p_explicit(n, z):
    total = 1.0
    prod = 1.0
    for i in range(n):
        prod *= z - n + i
        total += prod
    return total


def _r_explicit(n, z):
    total = 0.0
    prod = 1.0
    for i in range(n):
        prod /= z - i
        total += prod
    return total


def _three_term(n, z, y1, y2):
    if n == 1:
        return y1
    prev, cur = y1, y2
    for m in range(3, n + 1):
        d = z - m + 1
        prev, cur = cur, (z - m + 2) / d * cur - prev / d
    return cur


def _q_recurrence(n, z):
    return _three_term(n, z, (z + 1) / z, z / (z - 1) if n > 1 else None)


def _r_recurrence(n, z):
    return _three_term(n, z, 1 / z, 1 / (z - 1) if n > 1 else None)


def p_n(n: int, z, route: Route = Route.EXPLICIT) -> SequenceEval:
    """P_n(z); defined for every z."""
    _check_index(n, 0)
    z = _arg(z)
    route = Route(route)
    value = _p_recurrence(n, z) if route is Route.RECURRENCE else _p_explicit(n, z)
    return SequenceEval(Family.P, n, z, value, route)


def q_n(n: int, z, route: Route = Route.EXPLICIT) -> SequenceEval:
    """Q_n(z) for z outside {0, ..., n-1}."""
    _check_index(n, 1)
    z = _arg(z)
    route = Route(route)
    _check_singular(n, complex(z))
    if route is Route.RECURRENCE:
        value = _q_recurrence(n, z)
    else:
        value = 1.0 + _r_explicit(n, z)
    return SequenceEval(Family.Q, n, z, value, route)


def r_n(n: int, z, route: Route = Route.EXPLICIT) -> SequenceEval:
    """R_n(z) for z outside {0, ..., n-1}."""
    _check_index(n, 1)
    z = _arg(z)
    route = Route(route)
    _check_singular(n, complex(z))
    value = _r_recurrence(n, z) if route is Route.RECURRENCE else _r_explicit(n, z)
    return SequenceEval(Family.R, n, z, value, route)


def g_k(k: int, x) -> float:
    """G_k(x) = Gamma(x) + Gamma(x - 1) + ... + Gamma(x - k + 1) for x > k."""
    _check_index(k, 1)
    x = as_real(x)
    if x <= k:
        raise DomainError(f"G_k needs x > k, got k = {k}, x = {x!r}")
    return sum(gamma_real(x - i) for i in range(k))


def _scaled(residual, terms):
    return abs(residual) / max(1.0, *(abs(t) for t in terms))


def _check_theorem_arg(z, excluded_top):
    if isinstance(z, Number) and not isinstance(z, complex):
        z = complex(as_real(z))
    z = as_complex(z)
    k = round(z.real)
    if k <= excluded_top and abs(z - k) <= SINGULAR_TOLERANCE:
        raise SingularArgument(
            f"z = {z} lies in the excluded set Z^- U {{0, ..., {excluded_top}}}")
    return z


def verify_theorem1(n: int, z) -> float:
    """Scaled residual of K(z) = K(z - n) + (P_n(z) - 1) Gamma(z - n)."""
    _check_index(n, 1)
    z = _check_theorem_arg(z, n)
    kz = kurepa(z).value
    kzn = kurepa(z - n).value
    term = (p_n(n, z).value - 1.0) * gamma(z - n)
    return _scaled(kz - kzn - term, (kz, kzn, term))


def verify_theorem2(n: int, z) -> tuple[float, float]:
    """Scaled residuals of the Q- and R-forms K(z) = K(z - n) + (Q_n - 1) Gamma(z + 1)
    and K(z) = K(z - n) + R_n Gamma(z + 1)."""
    _check_index(n, 1)
    z = _check_theorem_arg(z, n - 1)
    kz = kurepa(z).value
    kzn = kurepa(z - n).value
    g = gamma(z + 1)
    term_q = (q_n(n, z).value - 1.0) * g
    term_r = r_n(n, z).value * g
    return (_scaled(kz - kzn - term_q, (kz, kzn, term_q)),
            _scaled(kz - kzn - term_r, (kz, kzn, term_r)))
