import cmath
import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kurepa import DomainError, PoleError, gamma, gamma_real, gamma_residue, log_gamma
from kurepa.gamma_core import POLE_TOLERANCE


def test_gamma_three():
    assert gamma(3) == pytest.approx(2.0, rel=1e-15)


def test_gamma_half():
    assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)


def test_gamma_four_and_a_half():
    # Gamma(4.5) = 0.5 * 1.5 * 2.5 * 3.5 * sqrt(pi)
    expected = 0.5 * 1.5 * 2.5 * 3.5 * math.sqrt(math.pi)
    assert gamma(4.5).real == pytest.approx(expected, rel=1e-13)
    assert expected == pytest.approx(11.6317283966, rel=1e-11)


@pytest.mark.parametrize("n", range(16))
def test_gamma_integers(n):
    assert gamma_real(n + 1) == pytest.approx(math.factorial(n), rel=1e-13)


@pytest.mark.parametrize("z", [
    complex(0.7, 9.5), complex(19.0, -7.0), complex(29.0, 0.0), complex(-3.3, 2.0),
    complex(-10.5, 0.3), complex(0.2, -7.0), complex(-0.999, 0.0), complex(-20.25, 0.0),
])
def test_gamma_against_mpmath(z):
    ref = complex(mpmath.gamma(z))
    assert abs(gamma(z) - ref) <= 1e-12 * abs(ref)


@pytest.mark.parametrize("z", [0, -1, -2, -7, complex(-3, 5e-10), -4 + 1e-10])
def test_gamma_poles(z):
    with pytest.raises(PoleError):
        gamma(z)


def test_gamma_just_outside_pole_tolerance():
    z = -2 + 10 * POLE_TOLERANCE
    assert gamma(z).real == pytest.approx(float(mpmath.gamma(z)), rel=1e-6)


@pytest.mark.parametrize("bad", [float("nan"), float("inf"), complex(1, float("inf")), "3"])
def test_gamma_rejects_nonfinite(bad):
    with pytest.raises(DomainError):
        gamma(bad)


@given(st.floats(0.1, 20.0), st.floats(-10.0, 10.0))
@settings(max_examples=300, deadline=None)
def test_gamma_functional_equation(re, im):
    z = complex(re, im)
    g1 = gamma(z + 1)
    assert abs(g1 - z * gamma(z)) <= 1e-10 * abs(g1)


@given(st.floats(-15.0, 20.0), st.floats(-10.0, 10.0))
@settings(max_examples=300, deadline=None)
def test_gamma_conjugate_symmetry(re, im):
    z = complex(re, im)
    if abs(z - round(z.real)) < 1e-3:
        return
    g = gamma(z)
    assert abs(gamma(z.conjugate()) - g.conjugate()) <= 1e-12 * abs(g)


def test_log_gamma_examples():
    assert abs(log_gamma(1)) < 1e-15
    assert abs(log_gamma(2)) < 1e-15
    assert log_gamma(11) == pytest.approx(math.log(math.factorial(10)), abs=1e-11)


@pytest.mark.parametrize("x", [1e-8, 1e-3, 0.3, 0.5, 1.7, 9.9, 14.99, 15.0, 40.0, 170.5, 999.0])
def test_log_gamma_absolute_accuracy(x):
    assert abs(log_gamma(x) - float(mpmath.loggamma(x))) <= 1e-11


@pytest.mark.parametrize("x", [1e4, 123456.7, 1e6, 1e7])
def test_log_gamma_large_x_relative(x):
    # at this size 1e-11 absolute is below one ulp of the result
    ref = float(mpmath.loggamma(x))
    assert abs(log_gamma(x) - ref) <= 4 * math.ulp(ref)


@given(st.floats(0.5, 30.0))
def test_exp_log_gamma_matches_gamma(x):
    assert math.exp(log_gamma(x)) == pytest.approx(gamma_real(x), rel=1e-10)


@pytest.mark.parametrize("x", [0, -1.5])
def test_log_gamma_domain(x):
    with pytest.raises(DomainError):
        log_gamma(x)


def test_gamma_residue_values():
    assert gamma_residue(0) == 1.0
    assert gamma_residue(1) == -1.0
    assert gamma_residue(3) == pytest.approx(-1 / 6, rel=1e-15)


@pytest.mark.parametrize("n", range(6))
def test_gamma_residue_limit_oracle(n):
    eps = 1e-7
    limit = (eps * gamma(-n + eps)).real
    assert limit == pytest.approx(gamma_residue(n), rel=1e-5)


def test_gamma_residue_domain():
    with pytest.raises(DomainError):
        gamma_residue(-1)


def test_gamma_large_negative_underflows_to_zero():
    assert gamma(-200.5) == 0j


def test_gamma_returns_complex():
    assert isinstance(gamma(2), complex)
    assert not cmath.isnan(gamma(complex(0.5, 40.0)))
