"""Family core: evaluation, derivatives and combinators of MapExpr trees."""

from .erf import erf_series
from .family_core import (
    analytic_slope_at_origin,
    compose,
    deriv,
    erf_slope_at_origin,
    evaluate,
    invert,
    invert_with_diagnostics,
    iterate,
    iteration_table,
    sample_curve,
)

__all__ = [
    "evaluate",
    "deriv",
    "compose",
    "iterate",
    "invert",
    "invert_with_diagnostics",
    "analytic_slope_at_origin",
    "erf_slope_at_origin",
    "erf_series",
    "sample_curve",
    "iteration_table",
]
