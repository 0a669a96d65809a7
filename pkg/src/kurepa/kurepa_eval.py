"""Evaluation of Kurepa's function K(z).

Three strategies are available:

* exact big-integer summation of factorials at non-negative integers,
* quadrature of ``int_0^inf e^-t (t^z - 1)/(t - 1) dt`` for Re z > 0,
* continuation to Re z <= 0 through K(z - 1) = K(z) - Gamma(z).

K is meromorphic with simple poles at -1 and at -n for n >= 3; z = -2 is a
removable point where K(-2) = 1.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ._backend import kernels
from .errors import ConvergenceError, DomainError, PoleError
from .gamma_core import POLE_TOLERANCE, as_complex, as_real, gamma, log_gamma

INTEGER_TOLERANCE = 1e-12
CONTINUATION_EPS = 1e-15
# Re z above which K(z) exceeds the double range
MAX_REAL_PART = 171.0

_ZERO_SPAN = 50.0   # s-range of the t = c e^-s map near t = 0
_PANEL_WIDTH = 10.0


class Method(str, enum.Enum):
    EXACT_SERIES = "ExactSeries"
    QUADRATURE = "Quadrature"
    CONTINUATION = "Continuation"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ExactLeftFactorial:
    n: int
    value: int


@dataclass(frozen=True)
class KurepaValue:
    value: complex
    abs_err_estimate: float
    method: Method


@dataclass(frozen=True)
class QuadratureConfig:
    """Tuning knobs of the K(z) quadrature.

    The integration range is split as ``(0, 1 - split_delta]``,
    ``[1 - split_delta, 1 + split_delta]`` (series in t - 1),
    ``[1 + split_delta, T]`` and a bounded tail beyond ``T >= tail_cutoff``.
    ``abs_tol`` is measured in units of max(1, Gamma(1 + Re z)), the natural
    size of the integrand.
    """

    split_delta: float = 0.25
    tail_cutoff: float = 60.0
    abs_tol: float = 1e-13
    max_subdivisions: int = 2000

    def __post_init__(self):
        if not 0.0 < self.split_delta <= 0.5:
            raise DomainError(f"split_delta must lie in (0, 0.5], got {self.split_delta!r}")
        if not self.tail_cutoff >= 10.0:
            raise DomainError(f"tail_cutoff must be >= 10, got {self.tail_cutoff!r}")
        if not self.abs_tol >= 1e-14:
            raise DomainError(f"abs_tol must be >= 1e-14, got {self.abs_tol!r}")
        if isinstance(self.max_subdivisions, bool) or not isinstance(self.max_subdivisions, int) \
                or self.max_subdivisions < 1:
            raise DomainError(f"max_subdivisions must be a positive integer, got {self.max_subdivisions!r}")


DEFAULT_CONFIG = QuadratureConfig()


def left_factorial_exact(n: int) -> ExactLeftFactorial:
    """!n = 0! + 1! + ... + (n-1)! as an exact integer."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise DomainError(f"left factorial requires an integer n >= 0, got {n!r}")
    total = 0
    fact = 1
    for i in range(n):
        total += fact
        fact *= i + 1
    return ExactLeftFactorial(n, total)


def _integer_value(z: complex):
    """Return int(z) if z is a non-negative integer within tolerance, else None."""
    if abs(z.imag) > INTEGER_TOLERANCE or z.real < -INTEGER_TOLERANCE:
        return None
    n = round(z.real)
    if abs(z.real - n) > INTEGER_TOLERANCE:
        return None
    return n


def _exact(n: int) -> KurepaValue:
    exact = left_factorial_exact(n).value
    try:
        value = float(exact)
    except OverflowError:
        raise DomainError(f"K({n}) exceeds the double-precision range") from None
    err = float(abs(Fraction(value) - exact))
    return KurepaValue(complex(value), err, Method.EXACT_SERIES)


def _tail_bound(sigma: float, cutoff: float, log_factor: bool) -> float:
    # int_T^inf e^-t t^sigma w(t) dt with w = 1/(t-1) or log(t)/(t-1), plus the e^-t/(t-1) part
    shrink = 1.0 - sigma / cutoff
    lead = -cutoff + sigma * math.log(cutoff) - math.log(cutoff - 1.0) - math.log(shrink)
    if log_factor:
        return math.exp(lead) * math.log(cutoff)
    return math.exp(lead) + math.exp(-cutoff) / (cutoff - 1.0)


def _integrate(z: complex, cfg: QuadratureConfig, derivative: bool):
    """Sum the four pieces of the integral; returns (value, abs_err)."""
    sigma = z.real
    # abs_tol * max(1, Gamma(1 + sigma)), formed in logs since Gamma(172) overflows
    tol = math.exp(math.log(cfg.abs_tol) + max(0.0, log_gamma(sigma + 1.0)))
    delta = cfg.split_delta
    c = 1.0 - delta

    cutoff = max(cfg.tail_cutoff, 2.0 * sigma + 10.0)
    while _tail_bound(sigma, cutoff, derivative) > tol / 10.0:
        cutoff += _PANEL_WIDTH
    tail = _tail_bound(sigma, cutoff, derivative)

    if derivative:
        kinds = (kernels.KIND_D_ZERO, kernels.KIND_D_SERIES, kernels.KIND_D)
    else:
        kinds = (kernels.KIND_K_ZERO, kernels.KIND_K_SERIES, kernels.KIND_K)
    outer = 1.0 + delta
    pieces = (
        (kinds[0], 0.0, _ZERO_SPAN, 1),
        (kinds[1], c, outer, 1),
        (kinds[2], outer, cutoff, max(1, math.ceil((cutoff - outer) / _PANEL_WIDTH))),
    )
    total = 0j
    err = tail
    for kind, a, b, nstart in pieces:
        re, im, e, _, ok = kernels.adaptive_gk(
            kind, z.real, z.imag, c, a, b, tol / 4.0, cfg.max_subdivisions, nstart)
        if not ok or not math.isfinite(e):
            raise ConvergenceError(
                f"quadrature on [{a}, {b}] stopped at error {e:.3e} > {tol / 4.0:.3e} "
                f"for z = {z}")
        total += complex(re, im)
        err += e
    # the part of t in (0, c e^-_ZERO_SPAN) that the mapped piece leaves out
    t_min = c * math.exp(-_ZERO_SPAN)
    if derivative:
        err += t_min * (1.0 - math.log(t_min)) / delta
    else:
        err += 2.0 * t_min / delta
    return total, err


def kurepa_integral(z, cfg: QuadratureConfig = DEFAULT_CONFIG) -> KurepaValue:
    """K(z) by quadrature of the integral representation (Re z > 0)."""
    z = as_complex(z)
    if z.real <= 0.0:
        raise DomainError(f"the integral representation needs Re z > 0, got {z}")
    if z.real > MAX_REAL_PART:
        raise DomainError(f"K(z) overflows double precision for Re z > {MAX_REAL_PART:g}")
    value, err = _integrate(z, cfg, derivative=False)
    return KurepaValue(value, err, Method.QUADRATURE)


def _check_pole(z: complex) -> None:
    n = round(z.real)
    if n == -1 or n <= -3:
        if abs(z - n) <= POLE_TOLERANCE:
            raise PoleError(f"K has a simple pole at z = {n}", pole=n)


def _continue(z: complex, cfg: QuadratureConfig) -> KurepaValue:
    # K(z) = K(w) - sum_{j=1}^{m} Gamma(z + j),  w = z + m,  Re w in (0, 1]
    m = math.floor(-z.real) + 1
    w = z + m
    base = _evaluate(w, cfg)
    gw = gamma(w)
    # sum_j Gamma(z + j) = Gamma(w) * S with S nested from the inside out.
    # Gamma(z+1) + Gamma(z+2) = Gamma(z+3)/(z+1) is folded into one step so
    # that the pole pair at z = -2 cancels exactly.
    if m == 1:
        s = 1.0 + 0j
        mags = [1.0]
    else:
        s = (z + 2.0) / (z + 1.0)
        for i in range(3, m):
            s = 1.0 + s / (z + i)
        # |Gamma(z + j)| / |Gamma(w)| for j = m..3, then the folded pair twice
        mags = []
        p = 1.0
        for j in range(m, 2, -1):
            mags.append(p)
            if j > 3:
                p /= abs(z + (j - 1))
        pair = abs((z + 2.0) / (z + 1.0)) if m == 2 else p / abs(z + 1.0)
        mags.extend([pair, pair])
    value = base.value - gw * s
    err = base.abs_err_estimate + CONTINUATION_EPS * abs(gw) * sum(mags)
    return KurepaValue(value, err, Method.CONTINUATION)


def _evaluate(z: complex, cfg: QuadratureConfig) -> KurepaValue:
    n = _integer_value(z)
    if n is not None:
        return _exact(n)
    if z.real > 0.0:
        return kurepa_integral(z, cfg)
    _check_pole(z)
    return _continue(z, cfg)


def kurepa(z, cfg: QuadratureConfig = DEFAULT_CONFIG) -> KurepaValue:
    """Evaluate K(z) anywhere except at its poles.

    Raises:
        PoleError: ``z`` is within ``POLE_TOLERANCE`` of -1 or of -n, n >= 3.
        DomainError: non-finite input or a result beyond the double range.
        ConvergenceError: the quadrature budget was exhausted.
    """
    return _evaluate(as_complex(z), cfg)


def kurepa_exact(z) -> KurepaValue:
    """K(n) by exact summation; ``z`` must be a non-negative integer."""
    z = as_complex(z)
    n = _integer_value(z)
    if n is None:
        raise DomainError(f"exact summation needs a non-negative integer, got {z}")
    return _exact(n)


def kurepa_continuation(z, cfg: QuadratureConfig = DEFAULT_CONFIG) -> KurepaValue:
    """K(z) for Re z <= 0 through the functional equation."""
    z = as_complex(z)
    if z.real > 0.0:
        raise DomainError(f"continuation is used for Re z <= 0, got {z}")
    _check_pole(z)
    return _continue(z, cfg)


def kurepa_derivative(x, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """K'(x) on [0, 1] from ``int_0^inf e^-t t^x log(t)/(t - 1) dt``."""
    x = as_real(x)
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"kurepa_derivative is defined on [0, 1], got {x!r}")
    return derivative_integral(x, cfg)


def derivative_integral(x: float, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """K'(x) for any real x >= 0 by the same quadrature."""
    x = as_real(x)
    if x < 0.0:
        raise DomainError(f"derivative integral needs x >= 0, got {x!r}")
    if x > MAX_REAL_PART:
        raise DomainError(f"K'(x) overflows double precision for x > {MAX_REAL_PART:g}")
    value, _ = _integrate(complex(x), cfg, derivative=True)
    return value.real


def kurepa_residue(n: int) -> float:
    """Residue of K at z = -n: -sum_{j<n} (-1)^j / j!  (0 at the removable n = 2)."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(f"kurepa_residue requires an integer n >= 1, got {n!r}")
    total = Fraction(0)
    fact = 1
    for j in range(n):
        if j:
            fact *= j
        total += Fraction((-1) ** j, fact)
    return float(-total)


@lru_cache(maxsize=4096)
def _seed_ratio(x0: float) -> float:
    if x0 == 1.0:
        return 1.0
    return kurepa(x0).value.real / gamma(x0 + 1.0).real


def kurepa_ratio(x) -> float:
    """K(x)/Gamma(x + 1) for real x > 0 without overflow.

    Seeds rho = K(x0)/Gamma(x0 + 1) on x0 in (0, 1] and iterates
    rho(x) = (rho(x - 1) + 1)/x, a contraction by 1/x.
    """
    x = as_real(x)
    if x <= 0.0:
        raise DomainError(f"kurepa_ratio requires x > 0, got {x!r}")
    steps = math.ceil(x) - 1
    x0 = x - steps
    return kernels.ratio_forward(_seed_ratio(x0), x0, steps)
