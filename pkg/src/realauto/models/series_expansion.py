"""Truncated Maclaurin expansion model."""

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class SeriesExpansion:
    """
    Truncated Maclaurin series of a primitive family.

    The coefficient of x^j is prefactor * base[j] * scale**j, where base
    holds the exact rational coefficients of the unscaled function. Odd
    families have exact zeros in every even slot.
    """

    family: str
    order: int
    base: tuple[Fraction, ...]
    scale: float
    prefactor: float
    radius: float

    @property
    def coeffs(self) -> tuple[float, ...]:
        """Binary64 coefficients c_0..c_N."""
        out = []
        for j, q in enumerate(self.base):
            if q == 0:
                out.append(0.0)
                continue
            weight = self.prefactor * float(q)
            try:
                out.append(weight * self.scale**j)
            except OverflowError:
                # b**j beyond binary64 range for large b and high order
                out.append(math.copysign(math.inf, weight))
        return tuple(out)

    @property
    def has_finite_radius(self) -> bool:
        """True for families with a singularity in the complex plane."""
        return math.isfinite(self.radius)

    def to_dict(self) -> dict:
        """Convert to dictionary representation."""
        return {
            "family": self.family,
            "order": self.order,
            "radius": self.radius if self.has_finite_radius else "inf",
            "coefficients": list(self.coeffs),
        }
