"""Series engine: truncated Maclaurin expansions of the primitive families."""

from .series_engine import (
    base_coefficients,
    default_order,
    eval_series,
    radius,
    taylor,
    termwise_scaling_holds,
)

__all__ = [
    "taylor",
    "eval_series",
    "radius",
    "base_coefficients",
    "default_order",
    "termwise_scaling_holds",
]
