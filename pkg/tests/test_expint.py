import math

import mpmath
import numpy as np
import pytest
from conftest import close, mpf
from hypothesis import given
from hypothesis import strategies as st

import oracle_values as ov
from hyperstieltjes.core import DivergenceError, DomainError
from hyperstieltjes.expint import (
    SERIES_CROSSOVER,
    _kernel_direct,
    _kernel_series,
    exp_integral,
    exp_integral_array,
    kernel,
    kernel_E_closed,
    kernel_E_integral,
    kernel_E_swap,
    kernel_laplace,
)
from hyperstieltjes.specfun import digamma
from hyperstieltjes.stieltjes import gamma_hr0_closed, gamma_stieltjes, sigma

EULER, Z2, Z3 = mpf(ov.EULER), mpf(ov.ZETA_2), mpf(ov.ZETA_3)


def test_kernel_values():
    assert abs(kernel(1e-12) + 0.5) < 1e-12
    assert abs(kernel(1.0) - (1 - 1 / (1 - math.exp(-1)))) < 1e-15
    assert abs(kernel(1.0) + 0.5819767) < 1e-7
    # K(50) = 1/50 - 1 - e^-50/(1 - e^-50); e^-50 ~ 2e-22 is below half an ulp,
    # so the double result must be the correctly rounded 1/50 - 1
    with mpmath.workdps(40):
        assert kernel(50.0) == float(mpmath.mpf(1) / 50 - 1 - 1 / mpmath.expm1(50))
    assert abs(kernel(50.0) + 1 - 1 / 50) < 1e-16


def test_kernel_crossover_continuity():
    t = np.array([SERIES_CROSSOVER])
    assert abs(_kernel_series(t)[0] - _kernel_direct(t)[0]) < 1e-13


def test_kernel_matches_mpmath_on_grid():
    t = np.geomspace(1e-6, 60, 200)
    with mpmath.workdps(40):
        expected = np.array([float(1 / mpmath.mpf(v) - 1 / (1 - mpmath.exp(-mpmath.mpf(v)))) for v in t])
    assert np.max(np.abs(kernel(t) - expected)) < 2e-15


def test_kernel_domain():
    with pytest.raises(DomainError):
        kernel(0.0)
    with pytest.raises(DomainError):
        kernel(np.array([1.0, -1.0]))


def test_exp_integral_examples():
    close(exp_integral(2, 0, 0), 1, 0)
    close(exp_integral(3, 1, 0), 0.25, 0)
    close(exp_integral(1, 0, 1), mpf(ov.E1_AT_1), 1e-13)
    with pytest.raises(DivergenceError):
        exp_integral(1, 0, 0)
    with pytest.raises(DomainError):
        exp_integral(1, 0, -1)


@pytest.mark.parametrize("s", [1, 2, 3.5])
def test_exp_integral_m0_matches_mpmath(s):
    for t in (1e-4, 0.3, 2.0, 15.0):
        assert abs(float(exp_integral(s, 0, t).value) - float(mpmath.expint(s, t))) < 1e-13


def test_exp_integral_log_weight():
    # (1/m!) int_1^inf e^-xt x^-s ln^m x dx against mpmath quadrature
    s, m, t = 2, 2, 0.7
    expected = mpmath.quad(lambda x: mpmath.exp(-x * t) * x**-s * mpmath.log(x) ** m, [1, 10, mpmath.inf]) / 2
    assert abs(float(exp_integral(s, m, t).value) - float(expected)) < 1e-13


@given(st.floats(1.0, 3.0), st.integers(0, 3), st.floats(0.01, 5.0))
def test_exp_integral_positive_and_decreasing(s, m, t):
    vals = exp_integral_array(s, m, [t, 1.5 * t])
    assert vals[0] > 0 and vals[1] < vals[0]
    # ln^m x/m! <= x^... bound: E <= e^-t / t
    assert vals[0] <= math.exp(-t) / t * (1 + 1e-12)


@pytest.mark.parametrize("z", [1.0, 2.0, 3.5])
def test_digamma_representation(z):
    res = kernel_laplace(z)
    assert abs(float(res.value.value) + math.log(z) - float(digamma(z).value)) < 1e-8
    assert res.value.err < 1e-8


@pytest.mark.parametrize("p", [1, 2, 3])
def test_kernel_integral_oracle(p):
    expected = mpf(getattr(ov, f"KERNEL_E_{p}"))
    close(kernel_E_integral(p, 0), expected, 1e-9)
    close(kernel_E_swap(p, 0), expected, 1e-10)
    close(kernel_E_closed(p), expected, 1e-15)


def test_kernel_integral_log_weight_routes():
    for p, m in ((1, 1), (2, 2)):
        a, b = kernel_E_integral(p, m), kernel_E_swap(p, m)
        assert abs(a.value.value - b.value.value) < 1e-9


def test_abstract_identity_p1():
    rhs = -gamma_stieltjes(1).value.value - sigma(1).value.value + Z2 - 1
    close(kernel_E_integral(1, 0), rhs, 1e-6)


def test_abstract_identity_p2():
    rhs = -EULER + sigma(2).value.value - mpf(ov.DZETA_2) - 1.5
    close(kernel_E_integral(2, 0), rhs, 1e-6)


def test_kernel_E_displays():
    g = [None] + [gamma_hr0_closed(r).value.value for r in (1, 2, 3)]
    p1 = g[1] - EULER**2 / 2 - gamma_stieltjes(1).value.value - sigma(1).value.value + Z2 / 2 - 1
    close(kernel_E_closed(1), p1, 1e-12)
    p2 = g[2] - g[1] - 2 * Z3 - mpf(ov.DZETA_2) + sigma(2).value.value - 1.5
    close(kernel_E_closed(2), p2, 1e-12)
    pi = mpmath.pi
    p3 = (g[3] - 1.5 * g[2] + g[1] - 1.25 * EULER - sigma(3).value.value + mpf(ov.DZETA_3)
          - pi**4 / 72 + 3 * pi**2 / 8 - mpmath.mpf(7) / 12)
    close(kernel_E_integral(3, 0), p3, 1e-5)
    close(kernel_E_closed(3), p3, 1e-12)


def test_kernel_E_routes_coherent():
    # gamma_{h^(1)} = gamma^2/2 + zeta(2)/2 turns the p=1 display into the abstract form
    g1 = EULER**2 / 2 + Z2 / 2
    a = g1 - EULER**2 / 2 + Z2 / 2
    assert abs(a - Z2) < 1e-30


def test_quad_result_metadata():
    res = kernel_E_integral(1, 0)
    assert res.panels > 0 and res.split_points == sorted(res.split_points)
    assert res.value.err < 1e-8
