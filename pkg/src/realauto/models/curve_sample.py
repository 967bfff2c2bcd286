"""Curve sample model backing the CSV curve output."""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CurveSample:
    """
    Sampled (x, f(x), f'(x)) triples on [-1+eps, 1-eps].

    xs is strictly increasing and all three sequences have equal length.
    """

    xs: tuple[float, ...]
    ys: tuple[float, ...]
    dys: tuple[float, ...]
    description: str
    eps: float = 0.0
    meta: dict[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not len(self.xs) == len(self.ys) == len(self.dys):
            raise ValueError(
                f"Sample lengths differ: {len(self.xs)}, {len(self.ys)}, {len(self.dys)}"
            )

    @property
    def grid_n(self) -> int:
        """Number of grid points."""
        return len(self.xs)

    def rows(self) -> list[tuple[float, float, float]]:
        """Rows in CSV order."""
        return list(zip(self.xs, self.ys, self.dys, strict=True))

    def to_dict(self) -> dict:
        """Convert to dictionary representation (metadata only)."""
        return {
            "description": self.description,
            "grid_n": self.grid_n,
            "eps": self.eps,
            **self.meta,
        }
