"""Asymptotic expansions in powers of 1/x and ln x, and Euler-Maclaurin tails.

A :class:`LogSeries` represents a finite sum

    x^(-shift) * sum_{k, p} c[k, p] * x^(-k) * ln^p x

with integer ``k >= 0`` and ``p >= 0``. That family is closed under
multiplication and differentiation, and every term has an explicit
(regularized) antiderivative, which is all the Euler-Maclaurin tail needs.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .core import AccuracyError, DomainError, PoleError, to_mpf
from .specfun import bernoulli_number, bernoulli_poly, stirling_row

__all__ = ["LogSeries", "em_tail", "psi_shift_series", "log1p_series", "rising_ratio_series"]


class LogSeries:
    """Truncated expansion x^-shift * sum c[k,p] x^-k ln^p x (k <= kmax)."""

    def __init__(self, M, terms=None, shift=0, kmax=24):
        self.M = M
        self.shift = shift
        self.kmax = kmax
        self.terms = {}
        for key, c in (terms or {}).items():
            if key[0] <= kmax and c != 0:
                self.terms[key] = to_mpf(M, c)

    # -- construction helpers
    @classmethod
    def constant(cls, M, c, kmax=24):
        return cls(M, {(0, 0): c}, kmax=kmax)

    @classmethod
    def log_power(cls, M, p, kmax=24):
        return cls(M, {(0, p): 1}, kmax=kmax)

    def _new(self, terms, shift=None):
        out = LogSeries(self.M, shift=self.shift if shift is None else shift, kmax=self.kmax)
        out.terms = {k: v for k, v in terms.items() if k[0] <= self.kmax and v != 0}
        return out

    # -- algebra
    def __add__(self, other):
        if not isinstance(other, LogSeries):
            if self.shift != 0:
                raise DomainError("cannot add a constant to a shifted series")
            other = LogSeries.constant(self.M, other, self.kmax)
        if other.shift != self.shift:
            raise DomainError("cannot add series with different power shifts")
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, 0) + c
        return self._new(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._new({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LogSeries):
            c = to_mpf(self.M, other)
            return self._new({k: v * c for k, v in self.terms.items()})
        kmax = min(self.kmax, other.kmax)
        terms = {}
        for (k1, p1), c1 in self.terms.items():
            for (k2, p2), c2 in other.terms.items():
                if k1 + k2 <= kmax:
                    key = (k1 + k2, p1 + p2)
                    terms[key] = terms.get(key, 0) + c1 * c2
        out = self._new(terms, shift=self.shift + other.shift)
        out.kmax = kmax
        return out

    __rmul__ = __mul__

    def times_power(self, s):
        """Multiply by x^-s."""
        return self._new(self.terms, shift=self.shift + s)

    def deriv(self):
        terms = {}
        for (k, p), c in self.terms.items():
            # d/dx x^-(a) L^p = x^-(a+1) (-a L^p + p L^(p-1)),  a = shift + k
            a = self.shift + k
            terms[(k + 1, p)] = terms.get((k + 1, p), 0) - a * c
            if p:
                terms[(k + 1, p - 1)] = terms.get((k + 1, p - 1), 0) + p * c
        out = self._new({}, shift=self.shift)
        out.kmax = self.kmax + 1
        out.terms = {k: v for k, v in terms.items() if v != 0}
        return out

    # -- evaluation
    def evaluate(self, x):
        M = self.M
        x = to_mpf(M, x)
        L = M.log(x)
        acc = M.mpf(0)
        for (k, p), c in self.terms.items():
            acc += c * x ** (-k) * L**p
        return acc * x ** (-to_mpf(M, self.shift))

    def reg_integral(self, N):
        """Regularized integral from N to infinity.

        For terms that are not integrable at infinity this is the analytic
        continuation in the exponent; for x^-1 ln^p x it is -ln^(p+1)N/(p+1).
        Either way, "partial sum + regularized tail" is the limit of the
        partial sum minus the divergent part of the antiderivative.
        """
        M = self.M
        N = to_mpf(M, N)
        L = M.log(N)
        acc = M.mpf(0)
        tiny = M.mpf(10) ** (-(M.dps // 2))
        for (k, p), c in self.terms.items():
            b = to_mpf(M, self.shift + k - 1)
            if b == 0:
                acc -= c * L ** (p + 1) / (p + 1)
                continue
            if abs(b) < tiny:
                raise PoleError("regularized integral is singular at this exponent", order=p + 1)
            Nb = N ** (-b)
            fact = 1
            for i in range(p + 1):
                acc += c * fact * L ** (p - i) * Nb / b ** (i + 1)
                fact *= p - i
        return acc

    def truncation_size(self, x):
        """Magnitude of the highest-order retained terms at x (a truncation proxy)."""
        top = max((k for k, _ in self.terms), default=0)
        if top < self.kmax:
            return self.M.mpf(0)
        top_terms = {key: c for key, c in self.terms.items() if key[0] == top}
        return abs(self._new(top_terms).evaluate(x))


def em_tail(f: LogSeries, N, order: int):
    """Euler-Maclaurin estimate of sum_{n > N} f(n) (regularized).

    Returns ``(value, err)`` where ``err`` combines the size of the last
    correction used and of the model truncation at N.
    """
    M = f.M
    if order < 1:
        order = 1
    value = f.reg_integral(N) - f.evaluate(N) / 2
    d = f.deriv()
    for k in range(1, order + 1):
        value -= to_mpf(M, bernoulli_number(2 * k)) / M.factorial(2 * k) * d.evaluate(N)
        d = d.deriv().deriv()
    # the first omitted correction dominates the remainder for smooth models
    nxt = abs(to_mpf(M, bernoulli_number(2 * order + 2)) / M.factorial(2 * order + 2) * d.evaluate(N))
    err = nxt + f.truncation_size(N) * to_mpf(M, N)
    if not M.isfinite(err):
        raise AccuracyError("Euler-Maclaurin tail produced a non-finite estimate")
    return value, err


def psi_shift_series(M, c, kmax=24) -> LogSeries:
    """psi(x + c) ~ ln x - sum_{k>=1} (-1)^k B_k(c) / (k x^k), c rational."""
    c = Fraction(c)
    terms = {(0, 1): 1}
    for k in range(1, kmax + 1):
        coeff = -((-1) ** k) * bernoulli_poly(k, c) / k
        if coeff:
            terms[(k, 0)] = coeff
    return LogSeries(M, terms, kmax=kmax)


def log1p_series(M, c, kmax=24) -> LogSeries:
    """ln(1 + c/x) = sum_{i>=1} (-1)^(i+1) c^i / (i x^i)."""
    c = Fraction(c)
    terms = {(i, 0): (-1) ** (i + 1) * c**i / i for i in range(1, kmax + 1)}
    return LogSeries(M, terms, kmax=kmax)


def rising_ratio_series(M, r: int, kmax=24) -> LogSeries:
    """x^(rising r) / x^r = sum_j [r j] x^(j - r), exact polynomial in 1/x."""
    row = stirling_row(r)
    return LogSeries(M, {(r - j, 0): row[j] for j in range(r + 1)}, kmax=max(kmax, r))


def auto_cutoff(s_abs: float, base: int = 30) -> int:
    """A summation cutoff beyond which the asymptotic models are accurate."""
    return max(base, int(math.ceil(s_abs)) + base)


def em_plan(ctx, s_abs: float = 0.0, min_n: int = 30) -> tuple[int, int]:
    """Choose (cutoff N, Euler-Maclaurin order K) for the working precision.

    Starts from ``ctx.em_order`` and raises the order only when the cutoff
    needed at that order would exceed ``ctx.n_terms``. The first omitted
    correction is about 2 (2K+2)! / (2 pi N)^(2K+2).
    """
    digits = ctx.working_dps + 2
    K = max(1, ctx.em_order)
    while True:
        log_need = (math.log10(2) + math.lgamma(2 * K + 3) / math.log(10) + digits) / (2 * K + 2)
        N = int(math.ceil(10**log_need / (2 * math.pi) + s_abs + 2 * K))
        N = max(N, min_n)
        if N <= ctx.n_terms or K >= 60:
            return N, K
        K += 1
