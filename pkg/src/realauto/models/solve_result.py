"""Solver output model for the family parameter b*."""

from dataclasses import dataclass, field
from enum import Enum


class SolverCase(str, Enum):
    """Which parameter equation was solved."""

    ARCTAN = "arctan"  # b / arctan(b) = a, a > 1
    TAN = "tan"  # b / tan(b) = a, 0 < a < 1


@dataclass(frozen=True)
class RootResult:
    """Outcome of a bracketed root search."""

    root: float
    residual: float
    iterations: int
    bracket: tuple[float, float]
    # (x, g(x)) for every evaluation of the shifted function, in call order
    trace: tuple[tuple[float, float], ...] = ()


@dataclass(frozen=True)
class SolveResult:
    """
    Solved family parameter with diagnostics.

    residual is |constraint(b_star) - a|.
    """

    case: SolverCase
    a: float
    b_star: float
    residual: float
    iterations: int
    bracket: tuple[float, float]
    # (b, constraint(b)) pairs in evaluation order
    trace: tuple[tuple[float, float], ...] = field(default=(), repr=False)

    def to_dict(self) -> dict:
        """Convert to dictionary representation."""
        return {
            "case": self.case.value,
            "a": self.a,
            "b_star": self.b_star,
            "residual": self.residual,
            "iterations": self.iterations,
            "bracket": list(self.bracket),
        }
