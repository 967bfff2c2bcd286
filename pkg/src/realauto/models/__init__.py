"""realauto models and data types."""

from .curve_sample import CurveSample
from .map_expr import (
    ArctanFam,
    Compose,
    Cubic,
    ErfFam,
    Identity,
    Iterate,
    MapExpr,
    MapKind,
    Negate,
    SinHalfPi,
    TanFam,
)
from .run_config import OutputFormat, RunConfig, Subcommand
from .seq_family import SeqFamily, SeqKind, parse_seq_index
from .series_expansion import SeriesExpansion
from .solve_result import RootResult, SolverCase, SolveResult
from .verification_report import CheckName, CheckResult, VerificationReport

__all__ = [
    "MapExpr",
    "MapKind",
    "Identity",
    "Cubic",
    "SinHalfPi",
    "ArctanFam",
    "TanFam",
    "ErfFam",
    "Negate",
    "Compose",
    "Iterate",
    "CurveSample",
    "RunConfig",
    "Subcommand",
    "OutputFormat",
    "SolveResult",
    "SolverCase",
    "RootResult",
    "VerificationReport",
    "CheckResult",
    "CheckName",
    "SeriesExpansion",
    "SeqFamily",
    "SeqKind",
    "parse_seq_index",
]
