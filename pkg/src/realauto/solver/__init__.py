"""Parameter solver module."""

from .param_solver import (
    arctan_constraint,
    arctan_constraint_slope,
    build_automorphism,
    solve_b_arctan,
    solve_b_tan,
    tan_constraint,
    tan_constraint_slope,
    tan_endpoint_resolution,
)

__all__ = [
    "solve_b_arctan",
    "solve_b_tan",
    "build_automorphism",
    "arctan_constraint",
    "arctan_constraint_slope",
    "tan_constraint",
    "tan_constraint_slope",
    "tan_endpoint_resolution",
]
