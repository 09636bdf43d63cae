"""Classical special functions used throughout the package.

Exact combinatorial quantities (Bernoulli numbers, Stirling numbers of the
first kind, generalized harmonic numbers) are returned as ``int`` or
``Fraction``. Transcendental functions return :class:`~hyperstieltjes.core.Real`
values computed at the working precision of an :class:`EvalContext`.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .core import (
    DEFAULT_CONTEXT,
    AccuracyError,
    DomainError,
    EvalContext,
    PoleError,
    Real,
    to_mpf,
)

__all__ = [
    "bernoulli_number",
    "bernoulli_poly",
    "bernoulli_periodic",
    "stirling_first",
    "stirling_row",
    "rising_factorial",
    "harmonic",
    "digamma",
    "digamma_array",
    "gamma_fn",
    "riemann_zeta",
    "zeta_neg_odd",
    "log_power_tail",
    "harmonic_asym",
]

_lock = threading.Lock()

# ---------------------------------------------------------------- Bernoulli

_BERNOULLI: list[Fraction] = [Fraction(1)]


def _extend_bernoulli(n: int) -> None:
    # sum_{k=0}^{j} C(j+1, k) B_k = 0  (convention B_1 = -1/2)
    with _lock:
        while len(_BERNOULLI) <= n:
            j = len(_BERNOULLI)
            acc = sum(math.comb(j + 1, k) * _BERNOULLI[k] for k in range(j))
            _BERNOULLI.append(-acc / (j + 1))


_extend_bernoulli(64)


def bernoulli_number(n: int) -> Fraction:
    """Exact Bernoulli number B_n with B_1 = -1/2."""
    if n < 0:
        raise DomainError(f"Bernoulli index must be >= 0, got {n}")
    if n >= len(_BERNOULLI):
        _extend_bernoulli(n)
    return _BERNOULLI[n]


@lru_cache(maxsize=None)
def _bernoulli_poly_coeffs(k: int) -> tuple[Fraction, ...]:
    # ascending powers of x
    return tuple(math.comb(k, i) * bernoulli_number(k - i) for i in range(k + 1))


def bernoulli_poly(k: int, x):
    """Bernoulli polynomial B_k(x); exact for int/Fraction arguments."""
    acc = 0
    for c in reversed(_bernoulli_poly_coeffs(k)):
        acc = acc * x + (c if isinstance(x, (int, Fraction)) else _coerce(c, x))
    return acc


def _coerce(c: Fraction, like):
    if isinstance(like, (float, np.floating, np.ndarray)):
        return float(c)
    # mpf: build in the same context as ``like``
    return type(like)(c.numerator) / c.denominator


def bernoulli_periodic(k: int, x):
    """Periodic extension P_k(x) = B_k(x - floor(x))."""
    if k < 1:
        raise DomainError(f"periodic Bernoulli index must be >= 1, got {k}")
    if isinstance(x, (int, Fraction)):
        frac = Fraction(x) - math.floor(x)
    elif isinstance(x, (float, np.floating, np.ndarray)):
        frac = x - np.floor(x)
    else:
        frac = x - type(x)(math.floor(x))
    return bernoulli_poly(k, frac)


def zeta_neg_odd(m: int) -> Fraction:
    """zeta(1 - 2m) = -B_{2m}/(2m) for m >= 1, exactly."""
    if m < 1:
        raise DomainError("m must be >= 1")
    return -bernoulli_number(2 * m) / (2 * m)


# ---------------------------------------------------------------- Stirling


@lru_cache(maxsize=None)
def stirling_row(r: int) -> tuple[int, ...]:
    """Row r of the unsigned Stirling numbers of the first kind, j = 0..r."""
    if r < 0:
        raise DomainError(f"r must be >= 0, got {r}")
    if r == 0:
        return (1,)
    prev = stirling_row(r - 1)
    # [r j] = [r-1 j-1] + (r-1) [r-1 j]
    row = [0] * (r + 1)
    for j in range(r + 1):
        left = prev[j - 1] if j >= 1 else 0
        right = prev[j] if j <= r - 1 else 0
        row[j] = left + (r - 1) * right
    return tuple(row)


def stirling_first(r: int, j: int) -> int:
    """Unsigned Stirling number of the first kind [r j]."""
    if j < 0 or j > r:
        raise DomainError(f"need 0 <= j <= r, got r={r}, j={j}")
    return stirling_row(r)[j]


def rising_factorial(x, r: int):
    """x (x+1) ... (x+r-1); the empty product 1 when r == 0.

    Exact for int/Fraction input, otherwise in the arithmetic of ``x``.
    """
    if r < 0:
        raise DomainError(f"r must be >= 0, got {r}")
    acc = 1
    for i in range(r):
        acc = acc * (x + i)
    return acc


# ---------------------------------------------------------------- harmonic

_HARMONIC: dict[int, list[Fraction]] = {}


def harmonic(n: int, v: int = 1) -> Fraction:
    """Exact generalized harmonic number H_n^(v) = sum_{k<=n} k^-v."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    if v < 1:
        raise DomainError(f"v must be >= 1, got {v}")
    table = _HARMONIC.get(v)
    if table is None or len(table) <= n:
        with _lock:
            table = _HARMONIC.setdefault(v, [Fraction(0)])
            while len(table) <= n:
                k = len(table)
                table.append(table[-1] + Fraction(1, k**v))
    return table[n]


# ---------------------------------------------------------------- digamma


def _check_pole(x, name):
    if x <= 0 and x == math.floor(x):
        raise PoleError(f"{name} has a pole at x={x}", pole=int(x), order=1)


def _asymptotic_shift(ctx: EvalContext) -> int:
    # smallest term of the Stirling-type series is about exp(-2 pi x)
    return max(12, math.ceil(0.37 * ctx.working_dps) + 2)


def digamma(x, ctx: EvalContext = DEFAULT_CONTEXT) -> Real:
    """psi(x) by upward recurrence followed by the asymptotic series."""
    M = ctx.mp
    x = to_mpf(M, x)
    _check_pole(x, "digamma")
    shift = M.mpf(0)
    x0 = _asymptotic_shift(ctx)
    while x < x0:
        shift -= 1 / x
        x += 1
    x2 = x * x
    acc = M.log(x) - 1 / (2 * x)
    xpow = x2
    err = None
    eps = M.mpf(10) ** (-ctx.working_dps)
    for k in range(1, 200):
        term = to_mpf(M, bernoulli_number(2 * k)) / (2 * k * xpow)
        if abs(term) < eps * abs(acc):
            err = abs(term)
            break
        acc -= term
        xpow *= x2
    if err is None:
        raise AccuracyError("digamma asymptotic series did not converge")
    value = acc + shift
    return Real(value, float(err + ctx.eps * (abs(value) + abs(shift))))


def digamma_array(x) -> np.ndarray:
    """Vectorized double-precision digamma for non-pole real arguments."""
    x = np.array(x, dtype=np.float64, copy=True)
    if np.any((x <= 0) & (x == np.floor(x))):
        raise PoleError("digamma has a pole at a non-positive integer")
    out = np.zeros_like(x)
    small = x < 12.0
    while np.any(small):
        out[small] -= 1.0 / x[small]
        x[small] += 1.0
        small = x < 12.0
    inv2 = 1.0 / (x * x)
    series = np.zeros_like(x)
    for k in range(8, 0, -1):
        series = (series + float(bernoulli_number(2 * k)) / (2 * k)) * inv2
    return out + np.log(x) - 0.5 / x - series


def gamma_fn(x, ctx: EvalContext = DEFAULT_CONTEXT) -> Real:
    """Gamma(x): exact factorial at positive integers, Stirling series otherwise."""
    M = ctx.mp
    if isinstance(x, (int, np.integer)) or (not isinstance(x, Fraction) and float(x).is_integer()):
        n = int(x)
        if n <= 0:
            raise PoleError(f"gamma has a pole at x={n}", pole=n, order=1)
        if n < 400:
            return Real(to_mpf(M, math.factorial(n - 1)), 0.0)
    x = to_mpf(M, x)
    _check_pole(x, "gamma")
    x0 = _asymptotic_shift(ctx)
    denom = M.mpf(1)
    while x < x0:
        denom *= x
        x += 1
    lg = (x - M.mpf(0.5)) * M.log(x) - x + M.log(2 * M.pi) / 2
    eps = M.mpf(10) ** (-ctx.working_dps)
    xpow = x
    x2 = x * x
    err = None
    for k in range(1, 200):
        term = to_mpf(M, bernoulli_number(2 * k)) / (2 * k * (2 * k - 1) * xpow)
        if abs(term) < eps:
            err = abs(term)
            break
        lg += term
        xpow *= x2
    if err is None:
        raise AccuracyError("log-gamma asymptotic series did not converge")
    value = M.exp(lg) / denom
    return Real(value, float(abs(value) * (err + ctx.eps)))


# ---------------------------------------------------------------- zeta


def _log_power_derivs(M, s, m, order, x):
    """Values f^(k)(x), k = 0..order, for f(x) = x^-s ln^m x."""
    L = M.log(x)
    coeffs = [M.mpf(0)] * (m + 1)
    coeffs[m] = M.mpf(1)
    out = []
    xpow = x ** (-s)
    for k in range(order + 1):
        val = M.mpf(0)
        for p in range(m, -1, -1):
            val = val * L + coeffs[p]
        out.append(val * xpow)
        # d/dx [x^{-s-k} L^p] = x^{-s-k-1} (-(s+k) L^p + p L^{p-1})
        coeffs = [-(s + k) * coeffs[p] + (p + 1) * (coeffs[p + 1] if p < m else 0) for p in range(m + 1)]
        xpow /= x
    return out


def log_power_tail(s, m: int, start: int, ctx: EvalContext = DEFAULT_CONTEXT, max_order: int = 60) -> Real:
    """sum_{n > start} ln^m(n) / n^s, analytically continued in s (s != 1).

    Sums directly up to a cutoff, then applies the Euler-Maclaurin tail with
    the regularized integral, so the result is the Hurwitz-type continuation
    for s <= 1.
    """
    M = ctx.mp
    s = to_mpf(M, s)
    if abs(s - 1) < M.mpf(10) ** (-ctx.working_dps // 2):
        raise PoleError("pole at s=1", pole=1, order=m + 1)
    N = max(start, 20 + int(math.ceil(abs(float(s)) / 2)) + 2 * m)
    partial = M.fsum(M.log(n) ** m * M.mpf(n) ** (-s) for n in range(start + 1, N + 1))
    L = M.log(N)
    Npow = M.mpf(N) ** (1 - s)
    # regularized integral of x^-s L^m from N to infinity
    integral = M.mpf(0)
    fact = 1
    for i in range(m + 1):
        integral += fact * L ** (m - i) * Npow / (s - 1) ** (i + 1)
        fact *= m - i
    derivs = _log_power_derivs(M, s, m, 2 * max_order, M.mpf(N))
    tail = integral - derivs[0] / 2
    eps = M.mpf(10) ** (-ctx.working_dps)
    scale = max(abs(partial), abs(tail), M.mpf(1))
    last = None
    err = None
    for k in range(1, max_order + 1):
        term = to_mpf(M, bernoulli_number(2 * k)) / M.factorial(2 * k) * derivs[2 * k - 1]
        if last is not None and abs(term) > abs(last):
            break
        tail -= term
        last = term
        if abs(term) < eps * scale:
            err = abs(term)
            break
    if err is None:
        err = abs(last) if last is not None else M.inf
        if err > ctx.tol:
            raise AccuracyError(
                f"Euler-Maclaurin tail for s={s} did not reach tol", estimate=Real(partial + tail, float(err))
            )
    value = partial + tail
    return Real(value, float(err + ctx.eps * scale))


def riemann_zeta(s, m: int = 0, ctx: EvalContext = DEFAULT_CONTEXT) -> Real:
    """m-th derivative of the Riemann zeta function at real s != 1."""
    if m < 0:
        raise DomainError(f"derivative order must be >= 0, got {m}")
    if float(s) == 1.0:
        raise PoleError("zeta has a pole at s=1", pole=1, order=1)
    tail = log_power_tail(s, m, 0, ctx)
    return tail if m % 2 == 0 else -tail


def harmonic_asym(n: int, k: int, ctx: EvalContext = DEFAULT_CONTEXT) -> Real:
    """ln n + gamma + 1/(2n) + sum_{m<=k} zeta(1-2m)/n^{2m}.

    The returned error is a rigorous bound on the dropped integral term: it
    is the digamma remainder, which is bounded by the first omitted term
    |B_{2k+2}| / ((2k+2) n^{2k+2}).
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    M = ctx.mp
    nn = M.mpf(n)
    value = M.log(nn) + M.euler + 1 / (2 * nn)
    for mm in range(1, k + 1):
        value += to_mpf(M, zeta_neg_odd(mm)) / nn ** (2 * mm)
    bound = abs(to_mpf(M, zeta_neg_odd(k + 1))) / nn ** (2 * k + 2)
    return Real(value, float(bound + ctx.eps * abs(value)))
