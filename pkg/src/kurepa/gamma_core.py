"""Complex gamma function, real log-gamma and gamma residues."""

from __future__ import annotations

import cmath
import math
from numbers import Number

from ._backend import kernels
from .errors import DomainError, PoleError

POLE_TOLERANCE = 1e-9

# Stirling series coefficients B_2k / (2k (2k-1)) for log-gamma at large x.
_STIRLING = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
)
_HALF_LOG_2PI = 0.91893853320467274178
_STIRLING_MIN_X = 15.0
_LANCZOS_SHIFT = 7.5  # g + 1/2 for the g = 7 coefficient set
_EXP_MAX = 709.0


def as_complex(z) -> complex:
    """Coerce ``z`` to ``complex`` and reject NaN/Inf components."""
    if not isinstance(z, Number):
        raise DomainError(f"expected a number, got {type(z).__name__}")
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"non-finite argument {z!r}")
    return z


def as_real(x) -> float:
    if isinstance(x, complex):
        if x.imag != 0.0:
            raise DomainError(f"expected a real argument, got {x!r}")
        x = x.real
    if not isinstance(x, Number):
        raise DomainError(f"expected a number, got {type(x).__name__}")
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"non-finite argument {x!r}")
    return x


def nearest_nonpositive_integer(z: complex) -> int:
    return min(0, round(z.real))


def _sinpi(z: complex) -> complex:
    # sin(pi z) with the real part reduced first, accurate near integers
    x, y = z.real, z.imag
    n = round(x)
    r = x - n
    s = math.sin(math.pi * r)
    c = math.cos(math.pi * r)
    if n % 2:
        s, c = -s, -c
    return complex(s * math.cosh(math.pi * y), c * math.sinh(math.pi * y))


def gamma(z) -> complex:
    """Gamma(z) for complex ``z``.

    Uses the Lanczos approximation on Re z >= 1/2 and the reflection formula
    elsewhere.

    Raises:
        PoleError: ``z`` lies within ``POLE_TOLERANCE`` of 0, -1, -2, ...
        DomainError: ``z`` is not finite.
    """
    z = as_complex(z)
    n = nearest_nonpositive_integer(z)
    if abs(z - n) <= POLE_TOLERANCE:
        raise PoleError(f"Gamma has a pole at z = {n}", pole=n)
    if z.real >= 0.5:
        g = _lanczos(z.real, z.imag)
        if g is None:
            raise DomainError(f"Gamma({z}) overflows double precision")
        return g
    g = _lanczos(1.0 - z.real, -z.imag)
    s = _sinpi(z)
    if g is None or cmath.isinf(s):
        # |Gamma(1 - z)| or |sin(pi z)| beyond range: Gamma(z) underflows
        return 0j
    return math.pi / (s * g)


def _lanczos(zr, zi):
    """Lanczos value, or None when exp() inside the kernel would overflow."""
    w = complex(zr - 1.0 + _LANCZOS_SHIFT, zi)
    log_mag = (zr - 0.5) * math.log(math.hypot(w.real, w.imag)) - zi * math.atan2(zi, w.real) - w.real
    if log_mag > _EXP_MAX:
        return None
    g = complex(*kernels.lanczos_gamma(zr, zi))
    if not (math.isfinite(g.real) and math.isfinite(g.imag)):
        return None
    return g


def gamma_real(x) -> float:
    """Gamma(x) for real ``x``; same contract as :func:`gamma`."""
    return gamma(as_real(x)).real


def log_gamma(x) -> float:
    """ln Gamma(x) for real x > 0."""
    x = as_real(x)
    if x <= 0.0:
        raise DomainError(f"log_gamma requires x > 0, got {x!r}")
    if x < 0.5:
        # Gamma(x) = Gamma(x + 1)/x keeps the argument in the Lanczos range
        return kernels.lanczos_log_gamma(x + 1.0) - math.log(x)
    if x < _STIRLING_MIN_X:
        return kernels.lanczos_log_gamma(x)
    inv = 1.0 / x
    inv2 = inv * inv
    corr = 0.0
    for c in reversed(_STIRLING):
        corr = corr * inv2 + c
    return (x - 0.5) * math.log(x) - x + _HALF_LOG_2PI + corr * inv


def gamma_residue(n: int) -> float:
    """Residue of Gamma at z = -n, i.e. (-1)^n / n!."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise DomainError(f"gamma_residue requires an integer n >= 0, got {n!r}")
    return (-1) ** n / math.factorial(n)
