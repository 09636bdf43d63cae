import mpmath
import pytest
from conftest import close, mpf

import oracle_values as ov
from hyperstieltjes.core import DivergenceError, DomainError, EvalContext, PoleError
from hyperstieltjes.hyperzeta import (
    aux_double_sum,
    laurent_data,
    pole_guard,
    remainder_bound,
    remainder_R,
    zH_shifted,
    zH_shifted_closed,
    zh_continued,
    zh_series,
)

Z2, Z3 = mpf(ov.ZETA_2), mpf(ov.ZETA_3)


def test_series_r0_is_shifted_zeta():
    close(zh_series(0, 1, 0), Z2, 1e-15)


def test_series_euler_sum(hi_ctx):
    close(zh_series(1, 2, 0, hi_ctx), 2 * Z3, 1e-22)


@pytest.mark.parametrize("r,s,key", [(1, 2.5, "ZH_1_2_5"), (2, 2.5, "ZH_2_2_5"), (2, 3, "ZH_2_3"), (3, 4, "ZH_3_4")])
def test_series_oracle(r, s, key, hi_ctx):
    # the oracle's own Euler-Maclaurin truncation is near 1e-20
    close(zh_series(r, s, 0, hi_ctx), mpf(getattr(ov, key)), 1e-18)


def test_series_derivative_matches_numerical_derivative():
    h = mpmath.mpf("1e-5")
    num = (zh_series(1, 2.5 + 1e-5).value - zh_series(1, 2.5 - 1e-5).value) / (2 * h)
    close(zh_series(1, 2.5, 1), num, 1e-8)


def test_series_diverges():
    with pytest.raises(DivergenceError):
        zh_series(2, 2)


def test_continued_examples():
    close(zh_continued(1, 2, k=1), 2 * Z3, 1e-6)
    close(zh_continued(2, 2.5, k=1), zh_series(2, 2.5).value, 1e-6)
    close(zh_continued(2, 3), zh_series(2, 3).value, 1e-8)
    a, b = zh_continued(2, 0.5, k=2), zh_continued(2, 0.5, k=3)
    assert abs(a.value - b.value) < 1e-6


@pytest.mark.parametrize("r", [1, 2, 3])
@pytest.mark.parametrize("ds", [0.5, 1, 2])
def test_route_agreement(r, ds):
    close(zh_continued(r, r + ds), zh_series(r, r + ds).value, 1e-6)


def test_continued_r1_below_one_is_finite_and_stable():
    # s = -0.5 lies in s > r - 2k - 1 for k >= 1
    a, b = zh_continued(1, -0.5, k=2), zh_continued(1, -0.5, k=4)
    assert abs(a.value - b.value) < 1e-8


def test_continued_domain():
    with pytest.raises(DomainError):
        zh_continued(2, -3.5, k=1)


@pytest.mark.parametrize("r,s,order", [(2, 2, 2), (2, 1, 2), (3, 2.0000001, 2), (2, 0, 1), (1, -3, 1)])
def test_pole_guard(r, s, order):
    with pytest.raises(PoleError) as info:
        zh_continued(r, s)
    assert info.value.order == order


def test_pole_guard_message():
    with pytest.raises(PoleError, match="pole of order 2 at s=2"):
        pole_guard(2, 2)
    pole_guard(2, 2.01)


@pytest.mark.parametrize("s,k,j", [(3, 1, 1), (0.5, 2, 2), (-1.5, 3, 1), (2.5, 2, 3)])
def test_remainder_within_proof_bound(s, k, j):
    assert abs(float(remainder_R(s, k, j).value)) <= remainder_bound(s, k, j)


def test_remainder_truncation_consistency():
    # the interval method with 10^3 and 10^4 unit intervals, against each other and the default route
    coarse = remainder_R(3, 1, 1, EvalContext(n_terms=1000), method="intervals")
    fine = remainder_R(3, 1, 1, EvalContext(n_terms=10000), method="intervals")
    assert abs(coarse.value - fine.value) <= coarse.err + fine.err
    close(remainder_R(3, 1, 1), fine.value, fine.err + 1e-15)


def test_remainder_value():
    # series of the H_n expansion error, summed independently with mpmath
    def inner(n):
        n = mpmath.mpf(n)
        return mpmath.harmonic(n) - mpmath.log(n) - mpmath.euler - 1 / (2 * n) + 1 / (12 * n**2)

    expected = mpmath.nsum(lambda n: inner(n) / n**3, [1, mpmath.inf])
    close(remainder_R(3, 1, 1), expected, 1e-15)


def test_remainder_end_to_end():
    close(zh_continued(1, 3, k=2), zh_series(1, 3).value, 1e-6)


def test_remainder_domain():
    with pytest.raises(DomainError):
        remainder_R(-3, 1, 1)


def test_aux_examples():
    close(aux_double_sum(2, 1), Z2 - 1, 1e-15)
    close(aux_double_sum(2, 0), Z3, 1e-15)
    a = aux_double_sum(1.5, 2, method="direct")
    b = aux_double_sum(1.5, 2, method="expanded")
    assert abs(a.value - b.value) < 1e-9


@pytest.mark.parametrize("q", [0.5, 1.5, 2, 3])
@pytest.mark.parametrize("v", [1, 2, 3])
def test_aux_dual_route(q, v):
    a = aux_double_sum(q, v, method="direct")
    b = aux_double_sum(q, v, method="expanded")
    assert abs(a.value - b.value) < 1e-9


def test_aux_continued_below_zero():
    with pytest.raises(DivergenceError):
        aux_double_sum(-0.5, 1, method="direct")
    # n^0.5/(n+1) = n^-0.5 - n^-0.5/(n+1), so the continued value is zeta(0.5) - aux(0.5)
    close(aux_double_sum(-0.5, 1), mpmath.zeta(0.5) - aux_double_sum(0.5, 1).value, 1e-12)


def test_shifted_examples(hi_ctx):
    close(zH_shifted(2, 0, 0, hi_ctx), 2 * mpf(ov.ZETA_3), 1e-22)
    close(zH_shifted(2, 1, 0, hi_ctx), 2 * Z3 + Z2 - 1, 1e-22)
    close(zH_shifted(2, 1, 0, hi_ctx), mpf(ov.ZH_SHIFTED_2_1), 1e-18)
    close(zH_shifted_closed(3, 2), zH_shifted(3, 2, 0).value, 1e-8)
    close(zH_shifted_closed(3, 2), mpf(ov.ZH_SHIFTED_3_2), 1e-15)
    close(zH_shifted_closed(4, 2), mpf(ov.ZH_SHIFTED_4_2), 1e-15)


@pytest.mark.parametrize("p", [2, 3, 4, 5])
@pytest.mark.parametrize("a", [0, 1, 2, 3])
def test_shifted_closed_equals_direct(p, a):
    close(zH_shifted_closed(p, a), zH_shifted(p, a).value, 1e-8)


def test_shifted_printed_variant_offset():
    diff = zH_shifted_closed(2, 1, variant="printed").value - zH_shifted(2, 1).value
    close(diff, -0.375, 1e-12)


def test_shifted_errors():
    with pytest.raises(DivergenceError):
        zH_shifted(1, 0)
    with pytest.raises(DomainError):
        zH_shifted_closed(1, 0)


def test_laurent_data():
    d1 = laurent_data(1, 1)
    close(d1.a_minus2, 1, 1e-15)
    close(d1.a_minus1, mpmath.euler, 1e-15)
    d2 = laurent_data(2, 0)
    close(d2.a_minus1, mpmath.euler - 1, 1e-15)
    d3 = laurent_data(3, 0)
    close(d3.a_minus2, 0.5, 1e-15)
    close(d3.a_minus1, -(1.5 - mpmath.euler) / 2, 1e-15)
    close(d1.gammas[0], mpf(ov.GAMMA_H1_0), 1e-15)


def test_laurent_expansion_contact():
    data = laurent_data(1, 2)
    d1 = abs(float(zh_continued(1, 1.05).value) - data.expansion(0.05))
    d2 = abs(float(zh_continued(1, 1.025).value) - data.expansion(0.025))
    assert 6 < d1 / d2 < 10  # O(h^3)
