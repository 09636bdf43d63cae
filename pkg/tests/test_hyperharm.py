from fractions import Fraction

import mpmath
import numpy as np
import pytest
from conftest import close
from hypothesis import given
from hypothesis import strategies as st

import oracle_values as ov
from hyperstieltjes.core import DomainError
from hyperstieltjes.hyperharm import (
    hh_analytic,
    hh_analytic_array,
    hh_closed,
    hh_exact,
    hh_model,
    hh_sequence,
    hh_step,
)


def test_exact_examples():
    assert hh_exact(1, 5) == 1
    assert hh_exact(3, 1) == Fraction(11, 6)
    assert hh_exact(2, 2) == Fraction(5, 2)
    assert hh_exact(4, 0) == Fraction(1, 4)


def test_exact_outside_memo_uses_closed_form():
    # r above the memo bound, checked against the defining recursion
    direct = sum(hh_exact(k, 8) for k in range(1, 6))
    assert hh_exact(5, 9) == direct
    assert hh_exact(20_000, 1) == sum(Fraction(1, k) for k in range(1, 20_001))


def test_exact_rejects_bad_input():
    with pytest.raises(DomainError):
        hh_exact(0, 1)
    with pytest.raises(DomainError):
        hh_exact(1, -1)


def test_step_examples():
    assert hh_step(2, 1) == Fraction(5, 2)
    assert hh_step(1, 4) == 1
    assert hh_step(3, 1) == Fraction(13, 3)


@given(st.integers(1, 100), st.integers(1, 6))
def test_step_equals_next_order(n, r):
    assert hh_step(n, r) == hh_exact(n, r + 1)


@given(st.integers(1, 60), st.integers(0, 6))
def test_defining_partial_sums(n, r):
    assert hh_exact(n, r + 1) == sum(hh_exact(k, r) for k in range(1, n + 1))


def test_closed_examples():
    close(hh_closed(2, 2), 2.5, 1e-15)
    close(hh_closed(1, 3), 1, 1e-15)
    ex = hh_exact(50, 4)
    close(hh_closed(50, 4), mpmath.mpf(ex.numerator) / ex.denominator, 1e-12 * float(ex))


@given(st.integers(1, 100), st.integers(1, 6))
def test_closed_matches_exact(n, r):
    ex = hh_exact(n, r)
    close(hh_closed(n, r), mpmath.mpf(ex.numerator) / ex.denominator, 1e-12 * float(ex))


def test_analytic_examples():
    close(hh_analytic(3, 1), mpmath.mpf(11) / 6, 1e-15)
    close(hh_analytic(1, 2), 1, 1e-15)
    close(hh_analytic(5, 0), 0.2, 1e-16)
    # h_x^(1) = psi(x+1) + gamma = H_x
    close(hh_analytic(2.5, 1), mpmath.psi(0, 3.5) + mpmath.euler, 1e-15)
    close(hh_analytic(2.5, 1), mpmath.mpf(ov.PSI_3_5) - mpmath.psi(0, 1), 1e-15)


@given(st.integers(1, 50), st.integers(1, 5))
def test_analytic_at_integers(n, r):
    ex = hh_exact(n, r)
    close(hh_analytic(n, r), mpmath.mpf(ex.numerator) / ex.denominator, 1e-10)


def test_analytic_domain():
    with pytest.raises(DomainError):
        hh_analytic(0, 1)


def test_sequence_matches_exact(ctx):
    M = ctx.mp
    for r in range(0, 5):
        seq = hh_sequence(40, r, M)
        for n in (1, 7, 40):
            ex = hh_exact(n, r)
            assert abs(seq[n - 1] - M.mpf(ex.numerator) / ex.denominator) < 1e-15 * float(ex)


def test_array_matches_scalar():
    x = np.array([0.5, 1.0, 3.3, 17.0, 250.0])
    for r in range(4):
        expected = [float(hh_analytic(v, r).value) for v in x]
        assert np.allclose(hh_analytic_array(x, r), expected, rtol=1e-13, atol=0)


@pytest.mark.parametrize("r", [0, 1, 2, 3])
def test_model_asymptotics(r, ctx):
    M = ctx.mp
    series = hh_model(r, M)
    for x in (200, 1000):
        assert abs(series.evaluate(M.mpf(x)) - hh_analytic(x, r, ctx).value) < 1e-15 * abs(hh_analytic(x, r, ctx).value)
