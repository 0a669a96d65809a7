"""Inequalities for K(x) on the positive real axis.

Every check evaluates both sides numerically and reports the comparison
together with the margins, so a failure can be told apart from rounding.
Strict inequalities must hold with a relative margin above
``STRICT_MARGIN``; weak ones may be violated by at most ``WEAK_SLACK``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import DomainError
from .gamma_core import as_real, gamma_real
from .kurepa_eval import kurepa, kurepa_ratio
from .recurrences import p_n, r_n

STRICT_MARGIN = 1e-12
WEAK_SLACK = 1e-9
EQUALITY_TOL = 1e-9

# Abramowitz & Stegun 6.1.35: Gamma(x + 1) on [0, 1], |error| < 5e-5
P5_COEFFICIENTS = (1.0, -0.5748646, 0.9512363, -0.6998588, 0.4245549, -0.1010678)
P5_ERROR_BOUND = 5e-5


class Lemma4Result(NamedTuple):
    ineq1_ok: bool
    ineq2_ok: bool
    margins: tuple[float, float]


class KaramataResult(NamedTuple):
    lhs: float
    rhs: float
    ok: bool


class Lemma5Result(NamedTuple):
    kx: float
    bound: float
    ok: bool


class Theorem3Result(NamedTuple):
    lhs: float
    rhs: float
    ok: bool
    arandelovic_rhs: float
    kx: float
    doubled_ok: bool


class CorollaryResult(NamedTuple):
    ratio: float
    ok: bool
    equality: bool


@dataclass(frozen=True)
class BoundReport:
    k: int
    x: float
    a_k: float
    b_k: float
    ratio: float
    left_ok: bool
    right_ok: bool
    gap: float
    right_equality: bool
    left_margin: float
    right_margin: float


def _unit_interval(x, name):
    x = as_real(x)
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"{name} is stated for x in [0, 1], got {x!r}")
    return x


def _strictly_less(a, b):
    return b - a > STRICT_MARGIN * max(abs(a), abs(b))


def _weakly_less(a, b):
    return a <= b + WEAK_SLACK * max(abs(a), abs(b))


def gamma_p5_approx(x) -> float:
    """Fifth-degree polynomial approximation of Gamma(x + 1) on [0, 1]."""
    x = _unit_interval(x, "gamma_p5_approx")
    acc = 0.0
    for c in reversed(P5_COEFFICIENTS):
        acc = acc * x + c
    return acc


def lemma4_check(x) -> Lemma4Result:
    """Gamma(x + 1/2) < x^2 - 7x/4 + 9/5 and (x + 2) Gamma(x + 1) > 9/5 on [0, 1]."""
    x = _unit_interval(x, "lemma4_check")
    m1 = (x * x - 1.75 * x + 1.8) - gamma_real(x + 0.5)
    m2 = (x + 2.0) * gamma_real(x + 1.0) - 1.8
    return Lemma4Result(m1 > 0.0, m2 > 0.0, (m1, m2))


def karamata_bound(t) -> KaramataResult:
    """log(t)/(t - 1) <= 1/sqrt(t), with the t = 1 value taken as the limit 1."""
    t = as_real(t)
    if t <= 0.0:
        raise DomainError(f"karamata_bound needs t > 0, got {t!r}")
    u = t - 1.0
    lhs = 1.0 if u == 0.0 else math.log1p(u) / u
    rhs = 1.0 / math.sqrt(t)
    return KaramataResult(lhs, rhs, lhs <= rhs + 1e-14)


def lemma5_check(x) -> Lemma5Result:
    """K(x) <= 9x/5 on [0, 1]."""
    x = _unit_interval(x, "lemma5_check")
    v = kurepa(x).value
    if abs(v.imag) > 1e-12:
        raise DomainError(f"K({x}) came back with imaginary part {v.imag!r}")
    bound = 1.8 * x
    return Lemma5Result(v.real, bound, v.real <= bound + WEAK_SLACK)


def theorem3_check(x) -> Theorem3Result:
    """K(x - 1) <= Gamma(x) for x >= 3, equality at x = 3.

    Also reports the equivalent form K(x) <= 2 Gamma(x) and the older bound
    K(x) <= 1 + 2 Gamma(x) it improves on.
    """
    x = as_real(x)
    if x < 3.0:
        raise DomainError(f"theorem3_check needs x >= 3, got {x!r}")
    lhs = kurepa(x - 1.0).value.real
    rhs = gamma_real(x)
    kx = kurepa(x).value.real
    return Theorem3Result(
        lhs=lhs,
        rhs=rhs,
        ok=lhs <= rhs * (1.0 + WEAK_SLACK),
        arandelovic_rhs=1.0 + 2.0 * rhs,
        kx=kx,
        doubled_ok=kx <= 2.0 * rhs * (1.0 + WEAK_SLACK),
    )


def _check_k(k):
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")


def corollary_ratio(k: int, x) -> CorollaryResult:
    """K(x - k)/Gamma(x - k + 1) <= 1 for x >= k + 2, equality at x = k + 2."""
    _check_k(k)
    x = as_real(x)
    if x < k + 2:
        raise DomainError(f"corollary_ratio needs x >= k + 2 = {k + 2}, got {x!r}")
    ratio = kurepa_ratio(x - k)
    return CorollaryResult(ratio, ratio <= 1.0 + WEAK_SLACK, abs(ratio - 1.0) <= EQUALITY_TOL)


def lower_upper(k: int, x: float) -> tuple[float, float, float]:
    """(A_k(x), B_k(x), B_k(x) - A_k(x)); the gap comes from R_k/P_{k-1}."""
    a = r_n(k, x).value
    p = p_n(k - 1, x).value
    return a, (p + 1.0) / p * a, a / p


def sandwich_bounds(k: int, x) -> BoundReport:
    """A_k(x) < K(x)/Gamma(x + 1) <= B_k(x) for x >= k + 2."""
    _check_k(k)
    x = as_real(x)
    if x < k + 2:
        raise DomainError(f"sandwich_bounds needs x >= k + 2 = {k + 2}, got {x!r}")
    a, b, gap = lower_upper(k, x)
    ratio = kurepa_ratio(x)
    return BoundReport(
        k=k,
        x=x,
        a_k=a,
        b_k=b,
        ratio=ratio,
        left_ok=_strictly_less(a, ratio),
        right_ok=_weakly_less(ratio, b),
        gap=gap,
        right_equality=abs(ratio - b) <= EQUALITY_TOL * b,
        left_margin=(ratio - a) / ratio,
        right_margin=(b - ratio) / b,
    )


def nesting_chain(k: int, x) -> tuple[float, float, float, float, float]:
    """(A_k, A_{k+1}, K/Gamma(x+1), B_{k+1}, B_k) at x >= k + 3."""
    _check_k(k)
    x = as_real(x)
    if x < k + 3:
        raise DomainError(f"nesting needs x >= k + 3 = {k + 3}, got {x!r}")
    a_k, b_k, _ = lower_upper(k, x)
    a_k1, b_k1, _ = lower_upper(k + 1, x)
    return a_k, a_k1, kurepa_ratio(x), b_k1, b_k


def nesting_check(k: int, x) -> bool:
    """A_k < A_{k+1} < K(x)/Gamma(x+1) <= B_{k+1} < B_k."""
    a_k, a_k1, ratio, b_k1, b_k = nesting_chain(k, x)
    return (_strictly_less(a_k, a_k1) and _strictly_less(a_k1, ratio)
            and _weakly_less(ratio, b_k1) and _strictly_less(b_k1, b_k))


def asymptotic_diagnostics(k: int, xs: Sequence[float]) -> list[tuple[float, float, float]]:
    """(x, x A_k(x), x^k (B_k - A_k)(x)) for each x; both columns tend to 1."""
    _check_k(k)
    rows = []
    for x in xs:
        x = as_real(x)
        if x < k + 2:
            raise DomainError(f"asymptotic_diagnostics needs x >= k + 2, got {x!r}")
        a, _, gap = lower_upper(k, x)
        rows.append((x, x * a, x ** k * gap))
    return rows
