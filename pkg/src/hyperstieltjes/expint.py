"""The digamma kernel K(t) = 1/t - 1/(1 - e^-t), the integro-exponential
E_s^m(t) = (1/m!) int_1^inf e^-xt x^-s ln^m x dx, and integrals of K against E.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .core import DEFAULT_CONTEXT, DivergenceError, DomainError, EvalContext, Real, rsum, to_mpf
from .quadrature import QuadResult, integrate
from .specfun import bernoulli_number, digamma_array, harmonic, riemann_zeta, stirling_row

__all__ = [
    "kernel",
    "exp_integral",
    "exp_integral_array",
    "kernel_E_integral",
    "kernel_E_swap",
    "kernel_E_closed",
    "kernel_E_closed_rhs",
    "kernel_laplace",
    "kernel_transform",
]

SERIES_CROSSOVER = 0.1
_SERIES_TERMS = 12

# K(t) = -sum_{n>=1} B_n(1) t^(n-1) / n!, with B_n(1) = B_n except B_1(1) = +1/2
_KERNEL_COEFFS = np.array(
    [-(0.5 if n == 1 else float(bernoulli_number(n))) / math.factorial(n) for n in range(1, _SERIES_TERMS + 1)]
)


def _kernel_series(t):
    acc = np.zeros_like(t)
    for c in _KERNEL_COEFFS[::-1]:
        acc = acc * t + c
    return acc


def _kernel_direct(t):
    return 1.0 / t + 1.0 / np.expm1(-t)


def kernel(t):
    """K(t) = 1/t - 1/(1 - e^-t) for t > 0; accepts scalars or arrays.

    Below t = 0.1 the Bernoulli series is used to avoid cancellation.
    """
    arr = np.asarray(t, dtype=np.float64)
    if np.any(arr <= 0):
        raise DomainError("kernel needs t > 0")
    small = arr < SERIES_CROSSOVER
    out = np.where(small, _kernel_series(np.where(small, arr, 0.0)), _kernel_direct(np.where(small, 1.0, arr)))
    return float(out) if out.ndim == 0 else out


# ---------------------------------------------------------------- E_s^m(t)

_Y_NODES, _Y_WEIGHTS = np.polynomial.legendre.leggauss(20)


def _y_cutoff(t_min: float, s: float, m: int) -> float:
    # integrand in y = ln x: exp(-t e^y + (1-s) y) y^m; stop once it is below 1e-30
    y = max(1.0, math.log(max(1.0, 1.0 / t_min)))
    while True:
        logv = -t_min * math.exp(y) + (1 - s) * y + m * math.log(max(y, 1e-300))
        if logv < -72 and t_min * math.exp(y) > 1:
            return y
        y += 0.5


def exp_integral_array(s: float, m: int, t, width: float = 0.25) -> np.ndarray:
    """E_s^m(t) for an array of t > 0, by composite Gauss-Legendre in y = ln x."""
    t = np.atleast_1d(np.asarray(t, dtype=np.float64))
    if np.any(t <= 0):
        raise DomainError("exp_integral_array needs t > 0")
    Y = _y_cutoff(float(t.min()), float(s), m)
    n_pan = int(math.ceil(Y / width))
    h = Y / n_pan
    y = (np.arange(n_pan)[:, None] * h + 0.5 * h * (_Y_NODES[None, :] + 1)).ravel()
    w = np.tile(_Y_WEIGHTS * 0.5 * h, n_pan)
    ey = np.exp(y)
    logw = (1 - s) * y + (m * np.log(y) if m else 0.0)
    expo = -t[:, None] * ey[None, :] + logw[None, :]
    vals = np.exp(expo) @ w
    return vals / math.factorial(m)


def exp_integral(s, m: int, t, ctx: EvalContext = DEFAULT_CONTEXT) -> Real:
    """E_s^m(t) = (1/m!) int_1^inf e^-xt x^-s ln^m x dx.

    ``t = 0`` is accepted for s > 1, where the value is 1/(s-1)^(m+1).
    The error estimate compares two panel widths.
    """
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    t = float(t)
    s = float(s)
    if t < 0:
        raise DomainError(f"t must be >= 0, got {t}")
    if t == 0:
        if s <= 1:
            raise DivergenceError(f"E_s^m(0) diverges for s <= 1 (s={s})")
        return Real(to_mpf(ctx.mp, 1) / to_mpf(ctx.mp, s - 1) ** (m + 1), 0.0)
    fine = float(exp_integral_array(s, m, [t], 0.125)[0])
    coarse = float(exp_integral_array(s, m, [t], 0.25)[0])
    return Real(fine, abs(fine - coarse) + 1e-15 * abs(fine))


# ---------------------------------------------------------------- kernel integrals


def kernel_laplace(z: float, ctx: EvalContext = DEFAULT_CONTEXT) -> QuadResult:
    """int_0^inf K(t) e^{-zt} dt, which equals psi(z) - ln z."""
    # |K| <= 1 on [1, inf), so the tail beyond T is at most e^{-zT}/z
    return kernel_transform(lambda t: np.exp(-z * t), ctx.tol, ctx, lambda T: math.exp(-z * T) / z)


def _e_tail_bound(T):
    # ln^m x / m! <= x, so E_p^m(t) <= e^-t / t for p >= 1, and |K| <= 1 + 1/T
    return (1 + 1 / T) * math.exp(-T) / T


def kernel_transform(inner, tol, ctx, tail=_e_tail_bound):
    """int_0^inf K(t) inner(t) dt.

    (0, 1] is mapped by t = e^-u so that logarithmic growth of ``inner``
    at 0 becomes polynomial growth against e^-u; [1, T] is split at 10 and
    T is chosen so that the tail bound (1 + 1/T) e^-T / T is below tol/10.
    """
    settings = ctx.quad

    def f_small(u):
        t = np.exp(-u)
        return kernel(t) * inner(t) * t

    U = 40.0
    while U < 400 and abs(float(f_small(np.array([U]))[0])) * 10 > tol * 1e-3:
        U += 10.0
    T = 10.0
    while tail(T) >= tol / 10:
        T += 1.0
    near = integrate(f_small, [0.0, math.log(1e4), U], settings, tol / 4)
    far = integrate(lambda t: kernel(t) * inner(t), [1.0, 10.0, max(T, 10.5)], settings, tol / 4)
    tail_bound = tail(T)
    value = Real(near.value.value + far.value.value, near.value.err + far.value.err + tail_bound)
    splits = [math.exp(-u) for u in near.split_points] + list(far.split_points)
    return QuadResult(value, near.panels + far.panels, sorted(splits))


def kernel_E_integral(p: int, m: int = 0, ctx: EvalContext = DEFAULT_CONTEXT) -> QuadResult:
    """int_0^inf K(t) E_p^m(t) dt by nested quadrature."""
    if p < 1:
        raise DomainError(f"p must be >= 1, got {p}")
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    tol = min(ctx.tol, 1e-9)
    return kernel_transform(lambda t: exp_integral_array(p, m, t), tol, ctx)


def kernel_E_swap(p: int, m: int = 0, ctx: EvalContext = DEFAULT_CONTEXT) -> QuadResult:
    """The same integral with the order swapped:

    (1/m!) int_1^inf x^-p ln^m x (psi(x) - ln x) dx, taken in y = ln x.
    """
    if p < 1:
        raise DomainError(f"p must be >= 1, got {p}")

    def f(y):
        x = np.exp(y)
        return np.exp((1 - p) * y) * y**m * (digamma_array(x) - y)

    Y = 40.0
    while abs(float(f(np.array([Y]))[0])) > 1e-18:
        Y += 10.0
    res = integrate(f, [0.0, 1.0, 5.0, Y], ctx.quad, min(ctx.tol, 1e-11))
    scale = 1.0 / math.factorial(m)
    return QuadResult(res.value * scale, res.panels, res.split_points)


@lru_cache(maxsize=64)
def kernel_E_closed_rhs(r: int, ctx: EvalContext = DEFAULT_CONTEXT) -> Real:
    """Right side of sum_j [r j] int K E_{r+1-j}^0 = (closed combination).

    Built from gamma_{h^(r)}(0), gamma, gamma(1), sigma_k, zeta and zeta'
    values and harmonic numbers.
    """
    from .stieltjes import gamma_hr0_closed, gamma_stieltjes, sigma

    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")
    M = ctx.mp
    row = stirling_row(r)
    g = M.euler
    g1 = gamma_stieltjes(1, ctx).value
    psi_r = to_mpf(M, harmonic(r - 1)) - g
    zeta = lambda q: riemann_zeta(q, 0, ctx)  # noqa: E731
    dzeta = lambda q: riemann_zeta(q, 1, ctx)  # noqa: E731
    Hr1 = harmonic(r - 1)
    parts = [
        gamma_hr0_closed(r, ctx).value * math.factorial(r - 1),
        Real(-g * g / 2 + (psi_r + g) * g, 0.0),
        zeta(2) * Fraction(1, 2),
        -sigma(1, ctx).value,
        -g1,
        Real(to_mpf(M, -sum((harmonic(j) / j for j in range(1, r)), Fraction(0)) - math.factorial(r)), 0.0),
    ]
    for j in range(1, r):
        d = r - j
        inner = [zeta(r + 2 - j) * Fraction(r + 3 - j, 2)]
        inner += [zeta(r + 1 - j - v) * zeta(v + 1) * Fraction(-1, 2) for v in range(1, d)]
        inner += [zeta(r + 2 - j - v) * (-((-1) ** v) * (harmonic(r - 1, v) + Fraction((-1) ** d, v - 1))) for v in range(2, d + 1)]
        finite = sum((harmonic(v) / Fraction(v) ** (r + 1 - j) for v in range(1, r)), Fraction(0))
        inner.append((sigma(r + 1 - j, ctx).value - dzeta(r + 1 - j) + finite) * ((-1) ** d))
        inner.append(Real(to_mpf(M, Hr1 / d - Fraction(r, r + 1 - j)), 0.0))
        parts.append(rsum(inner) * (-row[j]))
    for j in range(0, r):
        d = r - j
        term = (1 - d * psi_r) / d**2 + M.mpf(j) / (r + 1 - j)
        parts.append(Real(-row[j] * term, 0.0))
    return rsum(parts)


def kernel_E_closed(p: int, ctx: EvalContext = DEFAULT_CONTEXT) -> Real:
    """int_0^inf K(t) E_p^0(t) dt in closed form.

    Solves the triangular system sum_{j=1}^r [r j] I_{r+1-j} = RHS(r),
    r = 1..p, whose diagonal coefficient is [r 1] = (r-1)!.
    """
    if p < 1:
        raise DomainError(f"p must be >= 1, got {p}")
    I: dict[int, Real] = {}
    for r in range(1, p + 1):
        row = stirling_row(r)
        acc = kernel_E_closed_rhs(r, ctx)
        for j in range(2, r + 1):
            acc = acc - I[r + 1 - j] * row[j]
        I[r] = acc * Fraction(1, row[1])
    return I[p]
