"""Shared plumbing: evaluation settings, the value-with-error type, errors."""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import mpmath


class HyperzetaError(Exception):
    """Base class for errors raised by this package."""


class DomainError(HyperzetaError, ValueError):
    """Argument outside the domain of the requested quantity."""


class PoleError(DomainError):
    """Argument at (or numerically too close to) a pole."""

    def __init__(self, message, pole=None, order=None):
        super().__init__(message)
        self.pole = pole
        self.order = order


class DivergenceError(DomainError):
    """The defining series or integral does not converge."""


class AccuracyError(HyperzetaError, ArithmeticError):
    """Requested tolerance could not be met; ``estimate`` holds the best effort."""

    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate


@dataclass(frozen=True)
class QuadSettings:
    """Composite Gauss-Legendre settings for the quadrature routes."""

    nodes: int = 20
    max_panels: int = 400
    panel_tol: float = 1e-13


@dataclass(frozen=True)
class EvalContext:
    """Accuracy and truncation settings shared by every routine.

    ``tol`` is the target absolute tolerance. When ``dps`` is left unset the
    working precision is picked from ``tol``: 20 significant digits for
    ``tol >= 1e-13`` and at least 32 digits below that.
    """

    tol: float = 1e-10
    n_terms: int = 1000
    em_order: int = 4
    quad: QuadSettings = field(default_factory=QuadSettings)
    dps: int | None = None

    def __post_init__(self):
        if not (self.tol > 0 and math.isfinite(self.tol)):
            raise DomainError(f"tol must be positive and finite, got {self.tol!r}")
        if self.n_terms < 10:
            raise DomainError(f"n_terms must be >= 10, got {self.n_terms}")
        if self.em_order < 0:
            raise DomainError(f"em_order must be >= 0, got {self.em_order}")
        if self.dps is not None and self.dps < 15:
            raise DomainError(f"dps must be >= 15, got {self.dps}")

    @property
    def backend(self) -> str:
        return "double" if self.tol >= 1e-13 else "extended"

    @property
    def working_dps(self) -> int:
        if self.dps is not None:
            return self.dps
        if self.backend == "double":
            return 20
        return max(32, math.ceil(-math.log10(self.tol)) + 12)

    @cached_property
    def mp(self) -> mpmath.ctx_mp.MPContext:
        # private context: precision never touches mpmath's global state
        ctx = mpmath.MPContext()
        ctx.dps = self.working_dps
        return ctx

    @property
    def eps(self) -> float:
        """Rounding floor used in error estimates."""
        return 10.0 ** (3 - self.working_dps)

    def replace(self, **changes) -> EvalContext:
        return dataclasses.replace(self, **changes)

    def with_guard_digits(self, extra: int) -> EvalContext:
        return self.replace(dps=self.working_dps + extra)

    def to_mpf(self, x):
        return to_mpf(self.mp, x)


DEFAULT_CONTEXT = EvalContext()


def to_mpf(M, x):
    """Convert ints, floats, Fractions and mpf values into ``M``'s mpf type."""
    if isinstance(x, Fraction):
        return M.mpf(x.numerator) / x.denominator
    return M.mpf(x)


@dataclass(frozen=True)
class Real:
    """A real value together with a non-negative absolute error estimate.

    Arithmetic propagates the error estimates to first order (plus the
    product of errors for multiplication).
    """

    value: object
    err: float = 0.0

    def __post_init__(self):
        err = float(self.err)
        if not (err >= 0 and math.isfinite(err)):
            raise ValueError(f"error estimate must be finite and >= 0, got {self.err!r}")
        object.__setattr__(self, "err", err)

    def _split(self, other):
        if isinstance(other, Real):
            return other.value, other.err
        if isinstance(other, Fraction):
            kind = type(self.value)
            if kind in (int, float, Fraction):
                return float(other), 0.0
            # mpf classes are bound to their context, so this keeps precision
            return kind(other.numerator) / other.denominator, 0.0
        return other, 0.0

    def __add__(self, other):
        v, e = self._split(other)
        return Real(self.value + v, self.err + e)

    __radd__ = __add__

    def __sub__(self, other):
        v, e = self._split(other)
        return Real(self.value - v, self.err + e)

    def __rsub__(self, other):
        v, e = self._split(other)
        return Real(v - self.value, self.err + e)

    def __mul__(self, other):
        v, e = self._split(other)
        err = abs(self.value) * e + abs(v) * self.err + self.err * e
        return Real(self.value * v, float(err))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v, e = self._split(other)
        q = self.value / v
        err = (self.err + abs(q) * e) / (abs(v) - e) if abs(v) > e else math.inf
        if not math.isfinite(float(err)):
            raise AccuracyError("division by a quantity indistinguishable from zero")
        return Real(q, float(err))

    def __neg__(self):
        return Real(-self.value, self.err)

    def __float__(self):
        return float(self.value)

    def __abs__(self):
        return Real(abs(self.value), self.err)

    def contains(self, x, slack: float = 0.0) -> bool:
        """True when ``x`` lies within ``err + slack`` of the value."""
        v, _ = self._split(x)
        return float(abs(self.value - v)) <= self.err + slack

    def __repr__(self):
        return f"Real({mpmath.nstr(self.value, 17)} ± {self.err:.2e})"


def rsum(items) -> Real:
    """Sum an iterable of Real (or plain numbers) in fixed order."""
    total = None
    for it in items:
        total = it if total is None else total + it
    return Real(0, 0.0) if total is None else (total if isinstance(total, Real) else Real(total))
