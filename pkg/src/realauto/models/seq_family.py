"""Function sequences whose uniform limits lose injectivity."""

import math
from dataclasses import dataclass
from enum import Enum

from ..errors import ParameterError


class SeqKind(str, Enum):
    """Counterexample sequence kinds."""

    FLAT_BUMP = "bump"  # exp(-1/x^2) on x > 0 plus x/n
    PIECEWISE_CUBIC = "piecewise"  # -x^3/(3n) - x^2/(2n) left, x^2/2 right


@dataclass(frozen=True)
class SeqFamily:
    """
    One member of a counterexample sequence.

    n is a positive integer index, or math.inf for the limit function.
    """

    kind: SeqKind
    n: float

    def __post_init__(self) -> None:
        if isinstance(self.n, bool):
            raise ParameterError(f"Sequence index must be numeric, got {self.n!r}")
        if self.n == math.inf:
            return
        if not float(self.n).is_integer() or self.n < 1:
            raise ParameterError(
                f"Sequence index must be a positive integer or inf, got {self.n}"
            )

    @property
    def is_limit(self) -> bool:
        """True for the limit function (n = inf)."""
        return self.n == math.inf

    @classmethod
    def limit(cls, kind: SeqKind) -> "SeqFamily":
        """The limit member of a sequence."""
        return cls(kind=kind, n=math.inf)

    def describe(self) -> str:
        index = "inf" if self.is_limit else str(int(self.n))
        return f"{self.kind.value}[n={index}]"


def parse_seq_index(raw: str | int | float) -> float:
    """
    Parse a sequence index: a positive integer, 'inf' or the infinity sign.

    Raises:
        ParameterError: if the value is not a valid index
    """
    if isinstance(raw, str):
        text = raw.strip().lower()
        if text in ("inf", "infinity", "∞"):
            return math.inf
        try:
            value = int(text)
        except ValueError as e:
            raise ParameterError(f"Invalid sequence index: {raw!r}") from e
    else:
        value = raw
    if value != math.inf and (not float(value).is_integer() or value < 1):
        raise ParameterError(f"Invalid sequence index: {raw!r}")
    return value if value == math.inf else int(value)
