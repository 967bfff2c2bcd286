"""Resolved settings of one command-line invocation."""

from dataclasses import dataclass
from enum import Enum

from ..errors import ParameterError


class Subcommand(str, Enum):
    """Command-line subcommands."""

    BUILD = "build"
    ITERATE = "iterate"
    VERIFY = "verify"
    SERIES = "series"
    COUNTEREXAMPLE = "counterexample"


class OutputFormat(str, Enum):
    """Primary artifact format."""

    CSV = "csv"
    JSON = "json"


@dataclass(frozen=True)
class RunConfig:
    """
    One CLI run after defaults from the YAML configuration are applied.

    Only the fields a subcommand uses are meaningful for it; the rest keep
    their defaults.
    """

    subcommand: Subcommand
    grid: int
    eps: float
    out: str | None = None
    format: OutputFormat = OutputFormat.CSV
    a: float | None = None
    b: float | None = None
    n: float | None = None
    claim: float | None = None
    order: int | None = None
    family: str | None = None
    kind: str | None = None
    rows: int = 10
    profile: str = "default"
    tol_endpoint: float | None = None
    tol_deriv: float | None = None

    def __post_init__(self) -> None:
        if self.grid < 3:
            raise ParameterError(f"--grid must be >= 3, got {self.grid}")
        if not 0.0 <= self.eps <= 0.1:
            raise ParameterError(f"--eps must lie in [0, 0.1], got {self.eps}")
        if self.rows < 1:
            raise ParameterError(f"--rows must be >= 1, got {self.rows}")
