"""Shared helpers: constants, grids, root finding and artifact writers."""

from .artifacts import (
    curve_to_csv,
    format_float,
    iterates_to_csv,
    series_to_csv,
    sibling_path,
    to_json,
    write_text,
)
from .grid import symmetric_grid
from .roots import solve_bracketed

__all__ = [
    "solve_bracketed",
    "symmetric_grid",
    "curve_to_csv",
    "iterates_to_csv",
    "series_to_csv",
    "format_float",
    "to_json",
    "write_text",
    "sibling_path",
]
