"""The hyperharmonic zeta function zeta_{h^(r)}(s) and related Dirichlet series.

Two independent evaluations are provided: the defining series with an
Euler-Maclaurin tail (``zh_series``, valid for s > r) and the meromorphic
continuation assembled from Riemann zeta values (``zh_continued``). The
shifted harmonic series sum_k H_{k+a}/k^p has both a direct and a closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .asymptotic import LogSeries, em_plan, em_tail, psi_shift_series
from .core import DEFAULT_CONTEXT, DivergenceError, DomainError, EvalContext, PoleError, Real, rsum, to_mpf
from .hyperharm import hh_model, hh_sequence
from .specfun import (
    bernoulli_number,
    digamma,
    harmonic,
    log_power_tail,
    riemann_zeta,
    stirling_row,
    zeta_neg_odd,
)

__all__ = [
    "zh_series",
    "zh_continued",
    "remainder_R",
    "aux_double_sum",
    "zH_shifted",
    "zH_shifted_closed",
    "laurent_data",
    "LaurentData",
    "pole_guard",
]

POLE_RADIUS = 1e-6


def _model_kmax(ctx):
    return max(24, ctx.working_dps)


def _log_weighted_sum(values, s, m, M, N):
    """sum_{n<=N} values[n-1] ln^m(n) n^-s in fixed order."""
    return M.fsum(values[n - 1] * M.log(n) ** m * M.mpf(n) ** (-s) for n in range(1, N + 1))


def zh_series(r: int, s, m: int = 0, ctx: EvalContext = DEFAULT_CONTEXT) -> Real:
    """m-th s-derivative of sum_k h_k^(r) / k^s for s > r.

    Partial sum up to a cutoff N, then the Euler-Maclaurin tail of the
    smooth model h_x^(r) (-ln x)^m x^-s.
    """
    if r < 0 or m < 0:
        raise DomainError("r and m must be non-negative")
    if float(s) <= r:
        raise DivergenceError(f"series diverges for s <= r (s={s}, r={r})")
    M = ctx.mp
    s = to_mpf(M, s)
    N, K = em_plan(ctx, abs(float(s)))
    values = hh_sequence(N, r, M)
    partial = _log_weighted_sum(values, s, m, M, N)
    model = hh_model(r, M, _model_kmax(ctx)) * LogSeries.log_power(M, m, _model_kmax(ctx))
    tail, err = em_tail(model.times_power(s), N, K)
    value = partial + tail
    if m % 2:
        value = -value
    return Real(value, float(err) + ctx.eps * float(abs(value) + 1))


def pole_guard(r: int, s) -> None:
    """Raise PoleError if s is within POLE_RADIUS of a pole of zeta_{h^(r)}."""
    sf = float(s)
    k = round(sf)
    if abs(sf - k) <= POLE_RADIUS and k <= r:
        if k >= 1:
            raise PoleError(f"pole of order 2 at s={k}", pole=k, order=2)
        raise PoleError(f"simple pole at s={k}", pole=k, order=1)


def aux_double_sum(q, v: int, ctx: EvalContext = DEFAULT_CONTEXT, method: str = "auto") -> Real:
    """sum_{n>=1} n^-q / (n + v), continued in q.

    ``method="direct"`` sums with an Euler-Maclaurin tail (q > 0);
    ``method="expanded"`` uses sum_{n<=v} exactly plus
    sum_{m>=0} (-v)^m zeta_{>v}(q+1+m), which also covers q <= 0.
    """
    if v < 0:
        raise DomainError(f"v must be >= 0, got {v}")
    M = ctx.mp
    q = to_mpf(M, q)
    if v == 0:
        return riemann_zeta(q + 1, 0, ctx)
    if method == "auto":
        method = "direct" if q > 0 else "expanded"
    if method == "direct":
        if q <= 0:
            raise DivergenceError(f"direct summation needs q > 0, got q={q}")
        N, K = em_plan(ctx, abs(float(q)) + v)
        N = max(N, 4 * v)
        partial = M.fsum(M.mpf(n) ** (-q) / (n + v) for n in range(1, N + 1))
        kmax = _model_kmax(ctx)
        # 1/(x+v) = x^-1 sum_l (-v/x)^l
        inv = LogSeries(M, {(l, 0): (-v) ** l for l in range(kmax + 1)}, kmax=kmax)
        tail, err = em_tail(inv.times_power(q + 1), N, K)
        value = partial + tail
        return Real(value, float(err) + ctx.eps * float(abs(value)))
    if method != "expanded":
        raise DomainError(f"unknown method {method!r}")
    head = M.fsum(M.mpf(n) ** (-q) / (n + v) for n in range(1, v + 1))
    total = Real(head, 0.0)
    eps = M.mpf(10) ** (-ctx.working_dps)
    ratio = M.mpf(v) / (v + 1)
    for mm in range(0, 100000):
        p = q + 1 + mm
        if abs(p - 1) < POLE_RADIUS:
            raise PoleError(f"aux sum has a pole at q={q}", pole=float(q), order=1)
        term = log_power_tail(p, 0, v, ctx) * ((-v) ** mm)
        total = total + term
        # remaining terms are bounded by a geometric series at ratio v/(v+1)
        if mm > 2 and abs(term.value) * (v + 1) < eps * max(1, abs(total.value)):
            tail_bound = abs(term.value) * ratio / (1 - ratio)
            return Real(total.value, total.err + float(tail_bound))
    raise DomainError("expanded auxiliary sum did not converge")


# ---------------------------------------------------------------- remainder


_moment_cache: dict[tuple[int, int], Fraction] = {}


def _moment(k: int, l: int) -> Fraction:
    """Exact int_0^1 B_{2k+1}(u) u^l du."""
    key = (k, l)
    if key not in _moment_cache:
        deg = 2 * k + 1
        coeffs = [math.comb(deg, i) * bernoulli_number(deg - i) for i in range(deg + 1)]
        _moment_cache[key] = sum(c / (i + l + 1) for i, c in enumerate(coeffs))
    return _moment_cache[key]


def _piece(n: int, k: int, M, terms: int):
    """int_n^{n+1} P_{2k+1}(x) / x^{2k+2} dx from exact Bernoulli moments.

    Uses (n+u)^-a = n^-a sum_l binom(-a, l) (u/n)^l; for n == 1 the
    polynomial is integrated exactly against x^-a instead.
    """
    a = 2 * k + 2
    if n == 1:
        deg = 2 * k + 1
        # B(x - 1) as a polynomial in x
        poly = [Fraction(0)] * (deg + 1)
        for i in range(deg + 1):
            b = math.comb(deg, i) * bernoulli_number(deg - i)
            for l in range(i + 1):
                poly[l] += b * math.comb(i, l) * (-1) ** (i - l)
        acc = M.mpf(0)
        for l, c in enumerate(poly):
            e = l - a
            if e == -1:
                acc += to_mpf(M, c) * M.log(2)
            else:
                acc += to_mpf(M, c) * (M.mpf(2) ** (e + 1) - 1) / (e + 1)
        return acc
    acc = M.mpf(0)
    nn = M.mpf(n)
    binom = M.mpf(1)
    for l in range(terms):
        acc += binom * to_mpf(M, _moment(k, l)) / nn**l
        binom *= (-a - l) / M.mpf(l + 1)
    return acc / nn**a


def remainder_R(s, k: int, j: int, ctx: EvalContext = DEFAULT_CONTEXT, method: str = "harmonic") -> Real:
    """R(s,k,j) = sum_n n^-(s+1-j) int_n^inf P_{2k+1}(x)/x^{2k+2} dx.

    ``method="harmonic"`` uses the fact that the inner integral is the
    error of the truncated asymptotic expansion of H_n: it is evaluated
    exactly at extra precision for small n and by the continued expansion
    (a sum of zeta tails) beyond. ``method="intervals"`` sums exact
    per-unit-interval integrals up to ``ctx.n_terms`` and bounds the rest.
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if float(s) - j + 2 * k + 1 <= 0:
        raise DomainError(f"R(s,k,j) needs s - j + 2k + 1 > 0 (s={s}, k={k}, j={j})")
    if method == "intervals":
        return _remainder_intervals(s, k, j, ctx)
    if method != "harmonic":
        raise DomainError(f"unknown method {method!r}")
    guard = ctx.with_guard_digits(15)
    G = guard.mp
    sg = to_mpf(G, s)
    expo = sg + 1 - j
    N0 = max(40, 2 * k + 20)
    H = G.mpf(0)
    head = G.mpf(0)
    for n in range(1, N0 + 1):
        H += G.mpf(1) / n
        nn = G.mpf(n)
        trunc = G.log(nn) + G.euler + 1 / (2 * nn)
        for mm in range(1, k + 1):
            trunc += to_mpf(G, zeta_neg_odd(mm)) / nn ** (2 * mm)
        head += (H - trunc) * nn ** (-expo)
    # for n > N0 the integral equals the tail of the asymptotic series
    tail = Real(G.mpf(0), 0.0)
    eps = G.mpf(10) ** (-ctx.working_dps - 2)
    last = None
    for mm in range(k + 1, k + 200):
        term = log_power_tail(expo + 2 * mm, 0, N0, guard) * zeta_neg_odd(mm)
        if last is not None and abs(term.value) > abs(last):
            break
        tail = tail + term
        last = term.value
        if abs(term.value) < eps:
            break
    M = ctx.mp
    value = M.mpf(head + tail.value)
    return Real(value, float(abs(last)) + tail.err + ctx.eps * float(abs(value)))


def _remainder_intervals(s, k, j, ctx):
    M = ctx.with_guard_digits(10).mp
    expo = to_mpf(M, s) + 1 - j
    N = ctx.n_terms
    digits = ctx.working_dps + 10
    # inner integrals J_n = sum_{i>=n} piece_i, accumulated backwards from N
    pieces = [_piece(i, k, M, max(4, int(digits / max(math.log10(i), 0.3)) + 2)) for i in range(1, N)]
    bound_K = _sup_periodic(2 * k + 1)
    J = M.mpf(0)
    total = M.mpf(0)
    for n in range(N - 1, 0, -1):
        J += pieces[n - 1]
        total += J * M.mpf(n) ** (-expo)
    # dropped: J_N for each n < N, plus all n >= N; both bounded by the proof's inequality
    jn_bound = bound_K / ((2 * k + 1) * M.mpf(N) ** (2 * k + 1))
    head_weight = M.fsum(M.mpf(n) ** (-expo) for n in range(1, N))
    tail_bound = bound_K / (2 * k + 1) * log_power_tail(expo + 2 * k + 1, 0, N - 1, ctx).value
    err = jn_bound * abs(head_weight) + abs(tail_bound)
    return Real(ctx.mp.mpf(total), float(err))


def _sup_periodic(deg: int) -> float:
    """max |B_deg(u)| on [0, 1], sampled finely plus the endpoints (loose upward margin)."""
    coeffs = [float(math.comb(deg, i) * bernoulli_number(deg - i)) for i in range(deg + 1)]
    best = 0.0
    for t in range(2001):
        u = t / 2000
        best = max(best, abs(sum(c * u**i for i, c in enumerate(coeffs))))
    return best * 1.01


def remainder_bound(s, k: int, j: int, ctx: EvalContext = DEFAULT_CONTEXT) -> float:
    """The proof's bound (max|P_{2k+1}|/(2k+1)) zeta(s - j + 2k + 2)."""
    z = riemann_zeta(float(s) - j + 2 * k + 2, 0, ctx)
    return _sup_periodic(2 * k + 1) / (2 * k + 1) * float(z)


# ---------------------------------------------------------------- continuation


def zh_continued(r: int, s, k: int = 2, ctx: EvalContext = DEFAULT_CONTEXT) -> Real:
    """Meromorphic continuation of zeta_{h^(r)}(s) for real s > r - 2k - 1.

    Built from h_n^(r) = (1/Gamma(r)) sum_j [r j] n^(j-1)
    (H_{n+r-1} - psi(r) - gamma) with H_{n+r-1} = H_n + sum_v 1/(n+v) and
    the asymptotic expansion of H_n carried to order k.
    """
    if r < 1:
        raise DomainError(f"continuation route needs r >= 1, got {r}")
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if float(s) <= r - 2 * k - 1:
        raise DomainError(f"s={s} is outside the half-plane s > r - 2k - 1 = {r - 2 * k - 1}; increase k")
    pole_guard(r, s)
    M = ctx.mp
    s = to_mpf(M, s)
    row = stirling_row(r)
    psi_r = digamma(r, ctx)
    parts = []
    for j in range(1, r + 1):
        z0 = riemann_zeta(s + 1 - j, 0, ctx)
        z1 = riemann_zeta(s + 1 - j, 1, ctx)
        parts.append((-z1 - psi_r * z0) * row[j])
    for j in range(0, r):
        block = riemann_zeta(s + 1 - j, 0, ctx) * Fraction(1, 2)
        block = block + rsum(aux_double_sum(s - j, v, ctx) for v in range(1, r))
        parts.append(block * row[j + 1])
    for j in range(1, r + 1):
        block = rsum(riemann_zeta(s + 1 - j + 2 * mm, 0, ctx) * zeta_neg_odd(mm) for mm in range(1, k + 1))
        block = block + remainder_R(s, k, j, ctx)
        parts.append(block * row[j])
    return rsum(parts) * Fraction(1, math.factorial(r - 1))


# ---------------------------------------------------------------- shifted harmonic zeta


def zH_shifted(p, a: int, m: int = 0, ctx: EvalContext = DEFAULT_CONTEXT) -> Real:
    """sum_k H_{k+a} (-ln k)^m / k^p for p > 1, with an Euler-Maclaurin tail."""
    if a < 0 or m < 0:
        raise DomainError("a and m must be non-negative")
    if float(p) <= 1:
        raise DivergenceError(f"series diverges for p <= 1 (p={p})")
    M = ctx.mp
    p = to_mpf(M, p)
    N, K = em_plan(ctx, abs(float(p)) + a)
    H = to_mpf(M, harmonic(a))
    values = []
    for n in range(1, N + 1):
        H += M.mpf(1) / (n + a)
        values.append(H)
    partial = _log_weighted_sum(values, p, m, M, N)
    kmax = _model_kmax(ctx)
    model = (psi_shift_series(M, a + 1, kmax) + M.euler) * LogSeries.log_power(M, m, kmax)
    tail, err = em_tail(model.times_power(p), N, K)
    value = partial + tail
    if m % 2:
        value = -value
    return Real(value, float(err) + ctx.eps * float(abs(value)))


def zH_shifted_closed(p: int, a: int, ctx: EvalContext = DEFAULT_CONTEXT, variant: str = "adjudicated") -> Real:
    """Closed form of sum_k H_{k+a}/k^p for integer p >= 2.

        (p+2)/2 zeta(p+1) - 1/2 sum_{v=1}^{p-2} zeta(p-v) zeta(v+1)
        - sum_{v=1}^{p-1} (-1)^v zeta(p+1-v) H_a^(v) - (-1)^p sum_{v=1}^{a} H_v / v^p

    ``variant="printed"`` runs the last sum to a + 1 instead of a; that
    variant disagrees with direct summation whenever a >= 1 and is kept
    only so the discrepancy can be reported.
    """
    if int(p) != p or p < 2:
        raise DomainError(f"closed form needs an integer p >= 2, got {p}")
    if a < 0:
        raise DomainError(f"a must be >= 0, got {a}")
    if variant not in ("adjudicated", "printed"):
        raise DomainError(f"unknown variant {variant!r}")
    p = int(p)
    upper = a if variant == "adjudicated" else a + 1
    zeta = {q: riemann_zeta(q, 0, ctx) for q in range(2, p + 2)}
    parts = [zeta[p + 1] * Fraction(p + 2, 2)]
    parts += [zeta[p - v] * zeta[v + 1] * Fraction(-1, 2) for v in range(1, p - 1)]
    parts += [zeta[p + 1 - v] * (-((-1) ** v) * harmonic(a, v)) for v in range(1, p)] if a > 0 else []
    finite = sum((harmonic(v) / Fraction(v) ** p for v in range(1, upper + 1)), Fraction(0))
    parts.append(Real(to_mpf(ctx.mp, -((-1) ** p) * finite), 0.0))
    return rsum(parts)


# ---------------------------------------------------------------- Laurent data


@dataclass(frozen=True)
class LaurentData:
    """Principal part and regular-part constants of zeta_{h^(r)} at s = r."""

    r: int
    a_minus2: Real
    a_minus1: Real
    gammas: tuple

    def regular_part(self, h):
        """sum_m (-1)^m gamma_m h^m / m! as a float."""
        return sum((-1) ** m * float(g.value) * h**m / math.factorial(m) for m, g in enumerate(self.gammas))

    def expansion(self, h):
        """a_-2/h^2 + a_-1/h + regular part, the truncated Laurent series at s = r + h."""
        return float(self.a_minus2.value) / h**2 + float(self.a_minus1.value) / h + self.regular_part(h)


def laurent_data(r: int, M_max: int, ctx: EvalContext = DEFAULT_CONTEXT, method: str = "closed") -> LaurentData:
    """a_-2 = 1/Gamma(r), a_-1 = -psi(r)/Gamma(r) and gamma_{h^(r)}(m), m <= M_max."""
    from .stieltjes import gamma_hr  # local import: stieltjes depends on this module

    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")
    inv_gamma = Fraction(1, math.factorial(r - 1))
    a2 = Real(to_mpf(ctx.mp, inv_gamma), 0.0)
    a1 = digamma(r, ctx) * (-inv_gamma)
    gammas = tuple(gamma_hr(r, m, ctx, method=method).value for m in range(M_max + 1))
    return LaurentData(r, a2, a1, gammas)
