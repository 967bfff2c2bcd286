"""Verification report model."""

from dataclasses import dataclass, field
from enum import Enum


class CheckName(str, Enum):
    """Properties covered by a verification run."""

    MONOTONICITY = "monotonicity"
    ENDPOINT_PLUS = "endpoint_plus"
    ENDPOINT_MINUS = "endpoint_minus"
    ORIGIN_FIXED = "origin_fixed"
    DERIVATIVE_AT_ZERO = "derivative_at_zero"
    FD_CONSISTENCY = "fd_consistency"
    ODDNESS = "oddness"


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one property check: passed iff measured <= threshold."""

    name: CheckName
    passed: bool
    measured: float
    threshold: float

    def to_dict(self) -> dict:
        """Convert to dictionary representation."""
        return {
            "name": self.name.value,
            "pass": self.passed,
            "measured": self.measured,
            "threshold": self.threshold,
        }


@dataclass(frozen=True)
class VerificationReport:
    """
    Structured pass/fail outcomes for one MapExpr.

    The report passes iff every check passes.
    """

    expr: str
    a_claimed: float
    checks: tuple[CheckResult, ...]
    grid_n: int
    epsilon_margin: float = 0.0
    profile: str = "default"
    notes: tuple[str, ...] = field(default=(), compare=False)

    @property
    def passed(self) -> bool:
        """Overall verdict."""
        return all(check.passed for check in self.checks)

    @property
    def failed_checks(self) -> list[CheckName]:
        """Names of checks that failed."""
        return [check.name for check in self.checks if not check.passed]

    def check(self, name: CheckName) -> CheckResult:
        """Look up a check by name."""
        for result in self.checks:
            if result.name == name:
                return result
        raise KeyError(name.value)

    def to_dict(self) -> dict:
        """Convert to the JSON document layout."""
        return {
            "expr": self.expr,
            "pass": self.passed,
            "checks": [check.to_dict() for check in self.checks],
            "grid_n": self.grid_n,
            "epsilon_margin": self.epsilon_margin,
        }
