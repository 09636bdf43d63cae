"""Hyperharmonic numbers h_n^(r): exact values, closed form, analytic extension."""

from __future__ import annotations

import math
import threading
from fractions import Fraction

import numpy as np

from .asymptotic import LogSeries, psi_shift_series, rising_ratio_series
from .core import DEFAULT_CONTEXT, DomainError, EvalContext, Real, to_mpf
from .specfun import digamma, digamma_array, harmonic, rising_factorial

__all__ = ["hh_exact", "hh_closed", "hh_analytic", "hh_step", "hh_sequence", "hh_model", "hh_analytic_array"]

MEMO_MAX_N = 10_000
MEMO_MAX_R = 8

_rows: dict[int, list[Fraction]] = {}
_lock = threading.Lock()


def _memo_row(r: int, n: int) -> list[Fraction]:
    # row[r][n-1] = h_n^(r); each row is the running sum of the previous one
    with _lock:
        if r == 0:
            row = _rows.setdefault(0, [])
            while len(row) < n:
                row.append(Fraction(1, len(row) + 1))
            return row
    prev = _memo_row(r - 1, n)
    with _lock:
        row = _rows.setdefault(r, [])
        while len(row) < n:
            k = len(row)
            row.append((row[-1] if row else 0) + prev[k])
        return row


def hh_exact(n: int, r: int) -> Fraction:
    """Exact h_n^(r) from the defining recursion h_n^(r) = sum_{k<=n} h_k^(r-1)."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if r < 0:
        raise DomainError(f"r must be >= 0, got {r}")
    if n <= MEMO_MAX_N and r <= MEMO_MAX_R:
        return _memo_row(r, n)[n - 1]
    if r == 0:
        return Fraction(1, n)
    # outside the memo bounds the closed form is exact in rationals
    return math.comb(n + r - 1, r - 1) * (harmonic(n + r - 1) - harmonic(r - 1))


def hh_step(n: int, r: int) -> Fraction:
    """h_n^(r+1) from h_n^(r) via (1 + n/r) h_n^(r) - n/(r(n+r)) binom(n+r, r)."""
    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")
    return (1 + Fraction(n, r)) * hh_exact(n, r) - Fraction(n, r * (n + r)) * math.comb(n + r, r)


def hh_closed(n: int, r: int, ctx: EvalContext = DEFAULT_CONTEXT) -> Real:
    """n^(rising r) / (n Gamma(r)) * (H_{n+r-1} - psi(r) - gamma).

    For r = 0 the formula is not defined; the exact value 1/n is returned.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    M = ctx.mp
    if r == 0:
        return Real(to_mpf(M, Fraction(1, n)), 0.0)
    pref = Fraction(rising_factorial(n, r), n * math.factorial(r - 1))
    psi = digamma(r, ctx)
    bracket = (psi + M.euler) * -1 + harmonic(n + r - 1)
    return bracket * pref


def hh_analytic(x, r: int, ctx: EvalContext = DEFAULT_CONTEXT) -> Real:
    """x^(rising r) / (x Gamma(r)) * (psi(x+r) - psi(r)); 1/x when r = 0."""
    M = ctx.mp
    xm = to_mpf(M, x)
    if xm <= 0:
        raise DomainError(f"x must be positive, got {x}")
    if r < 0:
        raise DomainError(f"r must be >= 0, got {r}")
    if r == 0:
        return Real(1 / xm, ctx.eps * float(1 / xm))
    pref = rising_factorial(xm, r) / (xm * math.factorial(r - 1))
    diff = digamma(xm + r, ctx) - digamma(r, ctx)
    return diff * pref


def hh_sequence(N: int, r: int, M):
    """h_1^(r), ..., h_N^(r) as mpf values of context ``M`` (closed form, incremental)."""
    if r == 0:
        return [M.mpf(1) / n for n in range(1, N + 1)]
    out = []
    base = to_mpf(M, harmonic(r - 1))
    H = base
    binom = 1  # binom(n + r - 1, r - 1)
    for n in range(1, N + 1):
        H += M.mpf(1) / (n + r - 1)
        binom = binom * (n + r - 1) // n if n > 1 else r
        out.append(binom * (H - base))
    return out


def hh_model(r: int, M, kmax: int = 24) -> LogSeries:
    """Asymptotic expansion of h_x^(r) in the LogSeries family."""
    if r == 0:
        return LogSeries.constant(M, 1, kmax).times_power(1)
    psi_r = to_mpf(M, harmonic(r - 1)) - M.euler
    bracket = psi_shift_series(M, r, kmax) - psi_r
    series = rising_ratio_series(M, r, kmax) * bracket * (M.mpf(1) / math.factorial(r - 1))
    return series.times_power(1 - r)


def hh_analytic_array(x, r: int):
    """h_x^(r) in double precision for an array of x > 0."""
    x = np.asarray(x, dtype=np.float64)
    if r == 0:
        return 1.0 / x
    rising = np.ones_like(x)
    for i in range(r):
        rising = rising * (x + i)
    psi_r = float(harmonic(r - 1)) - float(np.euler_gamma)
    return rising / (x * math.factorial(r - 1)) * (digamma_array(x + r) - psi_r)
