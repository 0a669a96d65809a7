"""Seeded property suites backing ``kurepa verify``.

Every property reduces to a list of residuals that pass when
``residual <= tolerance``. Inequalities contribute the negated margin, so a
non-positive residual means the inequality held.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable, Iterable

from . import bounds
from .gamma_core import gamma, gamma_real, log_gamma
from .kurepa_eval import (
    kurepa,
    kurepa_derivative,
    kurepa_integral,
    kurepa_ratio,
    left_factorial_exact,
)
from .recurrences import Route, g_k, p_n, q_n, r_n

SUITES = ("gamma", "kurepa", "recurrences", "bounds")


@dataclass(frozen=True)
class PropertyResult:
    suite: str
    name: str
    checks: int
    failures: int
    worst: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.failures == 0


@dataclass(frozen=True)
class _Property:
    name: str
    tolerance: float
    residuals: Callable[[random.Random], Iterable[float]]


def _linspace(a, b, n):
    return [a + (b - a) * i / (n - 1) for i in range(n)]


def _rand_complex(rng, re_lo, re_hi, im_max):
    return complex(rng.uniform(re_lo, re_hi), rng.uniform(-im_max, im_max))


def _away_from_integers(rng, re_lo, re_hi, im_max, distance):
    while True:
        z = _rand_complex(rng, re_lo, re_hi, im_max)
        if abs(z - round(z.real)) >= distance:
            return z


def _rel(a, b):
    return abs(a - b) / abs(b)


# -- gamma -----------------------------------------------------------------

def _gamma_functional(rng):
    for _ in range(500):
        z = _rand_complex(rng, 0.1, 20.0, 10.0)
        g1 = gamma(z + 1)
        yield abs(g1 - z * gamma(z)) / abs(g1)


def _gamma_conjugate(rng):
    for _ in range(500):
        z = _rand_complex(rng, -10.0, 20.0, 10.0)
        if abs(z - round(z.real)) < 1e-3:
            continue
        g = gamma(z)
        yield abs(gamma(z.conjugate()) - g.conjugate()) / abs(g)


def _gamma_integers(rng):
    for n in range(16):
        yield _rel(gamma_real(n + 1), math.factorial(n))


def _exp_log_gamma(rng):
    for _ in range(200):
        x = rng.uniform(0.5, 30.0)
        yield _rel(math.exp(log_gamma(x)), gamma_real(x))


# -- kurepa ----------------------------------------------------------------

def _kurepa_sample(rng):
    return [_rand_complex(rng, 1.5, 10.0, 5.0) for _ in range(200)]


def _kurepa_functional(rng):
    for z in _kurepa_sample(rng):
        kz, km, g = kurepa(z).value, kurepa(z - 1).value, gamma(z)
        yield abs(kz - km - g) / max(1.0, abs(kz), abs(km), abs(g))


def _kurepa_three_term(rng):
    for z in _kurepa_sample(rng):
        t1 = kurepa(z + 1).value
        t2 = (z + 1) * kurepa(z).value
        t3 = z * kurepa(z - 1).value
        yield abs(t1 - t2 + t3) / max(1.0, abs(t1), abs(t2), abs(t3))


def _series_vs_quadrature(rng):
    for n in range(1, 13):
        exact = left_factorial_exact(n).value
        yield abs(kurepa_integral(n).value - exact) / max(1, exact)


def _continuation_consistency(rng):
    for _ in range(50):
        z = _rand_complex(rng, 0.05, 1.0, 5.0)
        yield abs(kurepa(z - 1).value - (kurepa(z).value - gamma(z)))


def _kurepa_conjugate(rng):
    for _ in range(100):
        z = _away_from_integers(rng, -4.0, 10.0, 5.0, 1e-2)
        v = kurepa(z).value
        yield abs(kurepa(z.conjugate()).value - v.conjugate())


def _derivative_fd(rng):
    h = 1e-4
    for x in (0.1, 0.3, 0.5, 0.7, 0.9):
        fd = (kurepa(x + h).value.real - kurepa(x - h).value.real) / (2 * h)
        yield abs(kurepa_derivative(x) - fd)


# -- recurrences -----------------------------------------------------------

def _route_equivalence(rng):
    for fn in (p_n, q_n, r_n):
        for n in range(1, 21):
            for _ in range(100):
                z = _away_from_integers(rng, -5.0, 25.0, 5.0, 1e-2)
                rec = fn(n, z, Route.RECURRENCE).value
                exp = fn(n, z, Route.EXPLICIT).value
                yield abs(rec - exp) / max(1.0, abs(exp))


def _q_minus_r(rng):
    for n in range(1, 21):
        for _ in range(20):
            z = _away_from_integers(rng, -5.0, 25.0, 5.0, 1e-2)
            yield abs(q_n(n, z).value - r_n(n, z).value - 1.0)


def _g_grid():
    for k in range(1, 11):
        for dx in (1.5, 2.0, 5.0, 10.0):
            yield k, k + dx


def _g_r_identity(rng):
    for k, x in _g_grid():
        g = g_k(k, x)
        yield _rel(gamma_real(x + 1) * r_n(k, x).value, g)


def _g_p_identity(rng):
    for k, x in _g_grid():
        g = g_k(k, x)
        yield _rel(gamma_real(x - k) * (p_n(k, x).value - 1.0), g)


def _p_telescoping(rng):
    for n in range(1, 9):
        for z in _linspace(n + 1.0, n + 6.0, 11):
            lhs = (p_n(n, z).value - 1.0) * gamma_real(z - n)
            rhs = sum(gamma_real(z - n + j) for j in range(1, n + 1))
            yield _rel(lhs, rhs)


# -- bounds ----------------------------------------------------------------

def _lemma4(rng):
    for x in _linspace(0.0, 1.0, 1001):
        m1, m2 = bounds.lemma4_check(x).margins
        yield -min(m1, m2)


def _p5_error(rng):
    yield max(abs(bounds.gamma_p5_approx(x) - gamma_real(x + 1.0))
              for x in _linspace(0.0, 1.0, 1001))


def _karamata(rng):
    ts = [10.0 ** (-3.0 + 6.0 * i / 999) for i in range(1000)] + [1.0]
    for t in ts:
        r = bounds.karamata_bound(t)
        yield r.lhs - r.rhs


def _lemma5(rng):
    for x in _linspace(0.0, 1.0, 101):
        r = bounds.lemma5_check(x)
        yield r.kx - r.bound


def _theorem3(rng):
    for x in _linspace(3.0, 20.0, 200):
        r = bounds.theorem3_check(x)
        yield (r.lhs - r.rhs) / r.rhs


def _theorem3_equality(rng):
    r = bounds.theorem3_check(3.0)
    yield abs(r.lhs - r.rhs)


def _theorem3_improvement(rng):
    # K(x) <= 2 Gamma(x) must beat 1 + 2 Gamma(x) by exactly 1
    for x in _linspace(3.0, 20.0, 200):
        r = bounds.theorem3_check(x)
        two_gamma = 2.0 * r.rhs
        yield max((r.kx - two_gamma) / two_gamma,
                  abs((r.arandelovic_rhs - two_gamma) - 1.0) / two_gamma)


def _sandwich(rng):
    for k in range(1, 7):
        for x in _linspace(k + 2.0, 40.0, 77):
            r = bounds.sandwich_bounds(k, x)
            yield -min(r.left_margin - bounds.STRICT_MARGIN, r.right_margin + bounds.WEAK_SLACK)


def _sandwich_equality(rng):
    for k in range(1, 7):
        r = bounds.sandwich_bounds(k, k + 2.0)
        yield abs(r.ratio - r.b_k) / r.b_k


def _nesting(rng):
    for k in range(1, 7):
        for x in _linspace(k + 3.0, 40.0, 75):
            yield 0.0 if bounds.nesting_check(k, x) else 1.0


def _asymptotics(rng):
    xs = (1e2, 1e3, 1e4, 1e6)
    for k in range(1, 5):
        rows = bounds.asymptotic_diagnostics(k, xs)
        devs_a = [abs(xa - 1.0) for _, xa, _ in rows]
        devs_g = [abs(xg - 1.0) for _, _, xg in rows]
        for (x, _, _), da, dg in zip(rows, devs_a, devs_g):
            yield max(da, dg) * x / 20.0 - 1.0
        # deviations must shrink (or stay at zero) as x grows
        for devs in (devs_a, devs_g):
            for d0, d1 in zip(devs, devs[1:]):
                yield 0.0 if d1 <= d0 else 1.0


def _ratio_consistency(rng):
    for x in _linspace(3.0, 25.0, 45):
        yield _rel(kurepa_ratio(x), kurepa(x).value.real / gamma_real(x + 1.0))


_REGISTRY = {
    "gamma": (
        _Property("functional_equation", 1e-10, _gamma_functional),
        _Property("conjugate_symmetry", 1e-12, _gamma_conjugate),
        _Property("integer_agreement", 1e-13, _gamma_integers),
        _Property("exp_log_gamma", 1e-10, _exp_log_gamma),
    ),
    "kurepa": (
        _Property("functional_equation", 1e-8, _kurepa_functional),
        _Property("three_term_equation", 1e-7, _kurepa_three_term),
        _Property("series_vs_quadrature", 1e-9, _series_vs_quadrature),
        _Property("continuation_consistency", 1e-10, _continuation_consistency),
        _Property("conjugate_symmetry", 1e-9, _kurepa_conjugate),
        _Property("derivative_vs_finite_difference", 1e-5, _derivative_fd),
    ),
    "recurrences": (
        _Property("route_equivalence", 1e-10, _route_equivalence),
        _Property("q_minus_r_is_one", 1e-12, _q_minus_r),
        _Property("g_r_identity", 1e-10, _g_r_identity),
        _Property("g_p_identity", 1e-10, _g_p_identity),
        _Property("p_telescoping", 1e-9, _p_telescoping),
    ),
    "bounds": (
        _Property("lemma4_strict", 0.0, _lemma4),
        _Property("p5_error_bound", bounds.P5_ERROR_BOUND, _p5_error),
        _Property("karamata", 1e-14, _karamata),
        _Property("lemma5", bounds.WEAK_SLACK, _lemma5),
        _Property("theorem3", bounds.WEAK_SLACK, _theorem3),
        _Property("theorem3_equality_at_3", 1e-9, _theorem3_equality),
        _Property("theorem3_improvement", bounds.WEAK_SLACK, _theorem3_improvement),
        _Property("sandwich", 0.0, _sandwich),
        _Property("sandwich_equality", bounds.EQUALITY_TOL, _sandwich_equality),
        _Property("nesting", 0.0, _nesting),
        _Property("asymptotic_envelope", 0.0, _asymptotics),
        _Property("ratio_recursion", 1e-9, _ratio_consistency),
    ),
}


def run_suite(suite: str, seed: int) -> list[PropertyResult]:
    """Run every property of ``suite``; each property gets its own RNG stream."""
    if suite not in _REGISTRY:
        raise KeyError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    results = []
    for index, prop in enumerate(_REGISTRY[suite]):
        rng = random.Random(f"{seed}:{suite}:{index}")
        checks = failures = 0
        worst = -math.inf
        for r in prop.residuals(rng):
            checks += 1
            if not r <= prop.tolerance:
                failures += 1
            worst = max(worst, r)
        results.append(PropertyResult(suite, prop.name, checks, failures, worst, prop.tolerance))
    return results
