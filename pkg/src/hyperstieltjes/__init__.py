"""Hyperharmonic numbers, the hyperharmonic zeta function and its Stieltjes constants."""

from .core import (
    AccuracyError,
    DivergenceError,
    DomainError,
    EvalContext,
    HyperzetaError,
    PoleError,
    Real,
)
from .expint import exp_integral, kernel, kernel_E_closed, kernel_E_integral
from .hyperharm import hh_analytic, hh_closed, hh_exact
from .hyperzeta import laurent_data, zh_continued, zh_series
from .stieltjes import gamma_hr, gamma_star_formula, gamma_star_limit, gamma_stieltjes, sigma
from .verify import run_suite

__version__ = "0.1.0"
