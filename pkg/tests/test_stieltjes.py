import math
from itertools import combinations

import mpmath
import pytest
from conftest import close, mpf

import oracle_values as ov
from hyperstieltjes.core import DivergenceError, DomainError, EvalContext
from hyperstieltjes.specfun import digamma, harmonic
from hyperstieltjes.stieltjes import (
    c_const,
    delta,
    delta_combination,
    gamma_H,
    gamma_hr,
    gamma_hr0_closed,
    gamma_hr0_explicit,
    gamma_hr_closed,
    gamma_hr_limit,
    gamma_hr_recurrence,
    gamma_star_formula,
    gamma_star_limit,
    gamma_stieltjes,
    sigma,
)

EULER = mpf(ov.EULER)
Z2, Z3 = mpf(ov.ZETA_2), mpf(ov.ZETA_3)


def oracle_gamma(r, m):
    return mpf(getattr(ov, f"GAMMA_H{r}_{m}"))


def test_gamma0_digits():
    close(gamma_stieltjes(0), 0.5772156649, 1e-9)


@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_stieltjes_oracle(m, hi_ctx):
    close(gamma_stieltjes(m, hi_ctx), mpf(getattr(ov, f"STIELTJES_{m}")), 1e-22)


def test_gamma1_value():
    close(gamma_stieltjes(1), -0.0728158455, 1e-8)


def test_gamma2_stable_under_cutoff():
    a = gamma_stieltjes(2, EvalContext(n_terms=10**4)).value
    b = gamma_stieltjes(2, EvalContext(n_terms=10**5)).value
    assert abs(a.value - b.value) < 1e-8


def test_gamma_H():
    close(gamma_H(0), EULER**2 / 2 + Z2 / 2, 1e-15)
    close(gamma_H(0), gamma_hr_limit(1, 0).value.value, 1e-15)
    close(gamma_H(1), gamma_hr_closed(1, 1).value, 1e-15)


@pytest.mark.parametrize("r", [0, 1, 2, 3])
@pytest.mark.parametrize("m", [0, 1, 2])
def test_limit_route_oracle(r, m):
    close(gamma_hr_limit(r, m), oracle_gamma(r, m), 1e-15)


def test_limit_route_r0_is_stieltjes():
    for m in range(3):
        close(gamma_hr_limit(0, m), gamma_stieltjes(m).value.value, 1e-16)


def test_r2_from_euler_sum():
    # gamma_{h^(2)} = gamma_{h^(1)} + 2 zeta(3) - gamma
    close(gamma_hr_limit(2, 0), EULER**2 / 2 + Z2 / 2 + 2 * Z3 - EULER, 1e-15)
    close(gamma_hr0_closed(2), EULER**2 / 2 + Z2 / 2 + 2 * Z3 - EULER, 1e-15)


@pytest.mark.parametrize("r", [2, 3, 4])
@pytest.mark.parametrize("m", [0, 1, 2])
def test_recurrence_matches_limit(r, m):
    close(gamma_hr_recurrence(r, m), gamma_hr_limit(r, m).value.value, 1e-14)


@pytest.mark.parametrize("r", [1, 2, 3, 4])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_closed_matches_limit(r, m):
    close(gamma_hr_closed(r, m), gamma_hr_limit(r, m).value.value, 1e-13)


@pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
def test_closed_m0_matches_limit(r):
    close(gamma_hr0_closed(r), gamma_hr_limit(r, 0).value.value, 1e-14)


def test_printed_recurrence_fails_at_m1():
    diff = gamma_hr_recurrence(2, 1, variant="printed").value.value - gamma_hr_limit(2, 1).value.value
    assert abs(diff) > 1


def test_printed_closed_fails_at_m1():
    diff = gamma_hr_closed(2, 1, variant="printed").value.value - gamma_hr_limit(2, 1).value.value
    assert abs(diff) > 1


def test_gamma_hr_closed_rejects_m0():
    with pytest.raises(DomainError):
        gamma_hr_closed(2, 0)


def test_explicit_forms():
    close(gamma_hr0_explicit(2, variant="printed").value - gamma_hr_limit(2, 0).value, -0.375, 1e-14)
    for r in (1, 2, 3, 4):
        close(gamma_hr0_explicit(r, variant="corrected"), gamma_hr_limit(r, 0).value.value, 1e-14)
    close(gamma_hr0_explicit(1, variant="printed"), gamma_hr0_explicit(1, variant="corrected").value.value, 0)


@pytest.mark.parametrize("r,m", [(1, 0), (1, 1), (2, 0), (2, 1), (3, 0), (3, 1)])
def test_three_routes(r, m):
    values = [gamma_hr(r, m, method=meth).value.value for meth in ("limit", "closed")]
    if r >= 2:
        values.append(gamma_hr(r, m, method="recurrence").value.value)
    assert max(abs(a - b) for a, b in combinations(values, 2)) < 1e-4
    if r >= 2:
        assert abs(values[1] - values[2]) < 1e-8


def test_dispatch_unknown():
    with pytest.raises(DomainError):
        gamma_hr(1, 0, method="guess")


def test_monotone_refinement():
    for r, m in ((0, 1), (1, 0), (2, 1)):
        coarse = gamma_hr_limit(r, m, EvalContext(n_terms=500)).value.err
        fine = gamma_hr_limit(r, m, EvalContext(n_terms=1000)).value.err
        assert fine <= coarse


def test_m_cap():
    with pytest.raises(DomainError):
        gamma_stieltjes(6)


@pytest.mark.parametrize("k", range(1, 7))
def test_sigma(k):
    a, b = sigma(k), sigma(k, method="swapped")
    assert abs(a.value.value - b.value.value) < 1e-10
    close(a, mpf(getattr(ov, f"SIGMA_{k}")), 1e-16)


def test_sigma_bracketed_by_partial_sums():
    s = sigma(2).value.value
    terms = [(-1) ** (j - 1) * mpmath.zeta(2 + j) / j for j in range(1, 40)]
    partials = [mpmath.fsum(terms[:n]) for n in range(1, 40)]
    for lo, hi in zip(partials[::2], partials[1::2]):
        assert hi <= s <= lo


def test_c_const():
    close(c_const(1, 1), mpf(ov.C_1_1), 1e-15)
    # 1/(k(k+1)) = sum_j (-1)^(j-1) k^-(j+1) turns -sum ln k/(k(k+1)) into zeta' values
    expected = mpmath.nsum(lambda j: (-1) ** (j - 1) * mpmath.zeta(j + 1, derivative=1), [1, mpmath.inf])
    close(c_const(1, 1), expected, 1e-15)
    close(c_const(2, 1), mpf(ov.C_2_1), 1e-15)
    close(c_const(2, 2), mpf(ov.C_2_2), 1e-15)
    for j in (1, 2, 3):
        assert c_const(j, 3).value.value < 0
    with pytest.raises(DivergenceError):
        c_const(1, 0)


def test_c_const_cutoff_stability():
    a = c_const(2, 2, EvalContext(n_terms=10**4)).value
    b = c_const(2, 2, EvalContext(n_terms=10**5)).value
    assert abs(a.value - b.value) <= a.err + b.err


def test_delta():
    assert delta(0) == 1
    assert [delta(r) for r in range(1, 6)] == [0] * 5
    for r in range(1, 9):
        assert abs(float(delta_combination(r).value)) < 1e-12
    # H_3 = psi(4) + gamma
    assert abs(float(digamma(4).value + mpmath.euler) - float(harmonic(3))) < 1e-15


def test_star_r0_is_stieltjes():
    for m in (0, 1):
        close(gamma_star_limit(0, m), gamma_stieltjes(m).value.value, 1e-10)


@pytest.mark.parametrize("r,m", [(1, 0), (1, 1), (2, 0), (2, 1)])
def test_star_routes(r, m):
    expected = mpf(getattr(ov, f"GAMMA_STAR_H{r}_{m}"))
    close(gamma_star_limit(r, m), expected, 1e-10)
    close(gamma_star_formula(r, m), expected, 1e-9)


def test_star_formula_r1_shortcuts():
    g1 = gamma_hr0_closed(1).value.value
    from hyperstieltjes.expint import kernel_E_integral

    close(gamma_star_formula(1, 0), g1 - 1 - kernel_E_integral(1, 0).value.value, 1e-12)
    rhs = g1 + gamma_stieltjes(1).value.value + sigma(1).value.value - Z2
    close(gamma_star_formula(1, 0), rhs, 1e-9)


def test_constant_result_fields():
    res = gamma_hr_limit(1, 0)
    assert res.kind == "gamma_hr" and res.method == "limit" and res.terms_used > 0
    assert res.value.err <= 1e-10
    assert math.isclose(float(res), float(res.value.value))
