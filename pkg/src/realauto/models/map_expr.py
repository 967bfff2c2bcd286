"""
Expression tree for candidate automorphisms of (-1, 1).

Every node is an immutable dataclass. Primitive nodes check their parameter
ranges on construction, so a MapExpr that exists is always well-formed.
All primitives are odd and fix the origin; negation, composition and
iteration preserve both properties.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import ClassVar

from ..errors import ParameterError
from ..utils.constants import ERF_K_MAX, HALF_PI


class MapKind(str, Enum):
    """Node kinds of the expression tree."""

    IDENTITY = "identity"
    CUBIC = "cubic"
    SIN_HALF_PI = "sin"
    ARCTAN = "arctan"
    TAN = "tan"
    ERF = "erf"
    NEGATE = "negate"
    COMPOSE = "compose"
    ITERATE = "iterate"


PRIMITIVE_KINDS: frozenset[MapKind] = frozenset(
    {
        MapKind.IDENTITY,
        MapKind.CUBIC,
        MapKind.SIN_HALF_PI,
        MapKind.ARCTAN,
        MapKind.TAN,
        MapKind.ERF,
    }
)


def _format_param(value: float) -> str:
    return repr(float(value))


def _require_finite(name: str, value: float) -> None:
    if not math.isfinite(value):
        raise ParameterError(f"{name} must be finite, got {value}")


@dataclass(frozen=True)
class MapExpr:
    """Base class of all expression nodes."""

    kind: ClassVar[MapKind]

    @property
    def is_primitive(self) -> bool:
        """Check if the node is a leaf family rather than a combinator."""
        return self.kind in PRIMITIVE_KINDS

    def describe(self) -> str:
        """Stable human-readable description of the expression."""
        raise NotImplementedError


@dataclass(frozen=True)
class Identity(MapExpr):
    """x -> x"""

    kind: ClassVar[MapKind] = MapKind.IDENTITY

    def describe(self) -> str:
        return "Identity"


@dataclass(frozen=True)
class Cubic(MapExpr):
    """x -> x^3"""

    kind: ClassVar[MapKind] = MapKind.CUBIC

    def describe(self) -> str:
        return "Cubic"


@dataclass(frozen=True)
class SinHalfPi(MapExpr):
    """x -> sin(pi x / 2)"""

    kind: ClassVar[MapKind] = MapKind.SIN_HALF_PI

    def describe(self) -> str:
        return "SinHalfPi"


@dataclass(frozen=True)
class ArctanFam(MapExpr):
    """
    x -> (a/b) arctan(b x), slope a at the origin.

    Only a > 1 and b > 0 are admitted. The endpoint identity f(1) = 1 holds
    only for the solved b; other b values are constructible so that
    mis-parameterized maps can be fed to the verifier.
    """

    a: float
    b: float
    kind: ClassVar[MapKind] = MapKind.ARCTAN

    def __post_init__(self) -> None:
        _require_finite("a", self.a)
        _require_finite("b", self.b)
        if self.a <= 1.0:
            raise ParameterError(f"ArctanFam requires a > 1, got {self.a}")
        if self.b <= 0.0:
            raise ParameterError(f"ArctanFam requires b > 0, got {self.b}")

    def describe(self) -> str:
        return f"ArctanFam(a={_format_param(self.a)}, b={_format_param(self.b)})"


@dataclass(frozen=True)
class TanFam(MapExpr):
    """x -> (a/b) tan(b x) with 0 < a < 1 and 0 < b < pi/2."""

    a: float
    b: float
    kind: ClassVar[MapKind] = MapKind.TAN

    def __post_init__(self) -> None:
        _require_finite("a", self.a)
        _require_finite("b", self.b)
        if not 0.0 < self.a < 1.0:
            raise ParameterError(f"TanFam requires 0 < a < 1, got {self.a}")
        if not 0.0 < self.b < HALF_PI:
            raise ParameterError(f"TanFam requires 0 < b < pi/2, got {self.b}")

    def describe(self) -> str:
        return f"TanFam(a={_format_param(self.a)}, b={_format_param(self.b)})"


@dataclass(frozen=True)
class ErfFam(MapExpr):
    """x -> erf(k x) / erf(k) with 0 < k <= 3."""

    k: float
    kind: ClassVar[MapKind] = MapKind.ERF

    def __post_init__(self) -> None:
        _require_finite("k", self.k)
        if not 0.0 < self.k <= ERF_K_MAX:
            raise ParameterError(
                f"ErfFam requires 0 < k <= {ERF_K_MAX}, got {self.k}"
            )

    def describe(self) -> str:
        return f"ErfFam(k={_format_param(self.k)})"


@dataclass(frozen=True)
class Negate(MapExpr):
    """x -> -inner(x)"""

    inner: MapExpr
    kind: ClassVar[MapKind] = MapKind.NEGATE

    def describe(self) -> str:
        return f"Negate({self.inner.describe()})"


@dataclass(frozen=True)
class Compose(MapExpr):
    """x -> outer(inner(x))"""

    outer: MapExpr
    inner: MapExpr
    kind: ClassVar[MapKind] = MapKind.COMPOSE

    def describe(self) -> str:
        return f"Compose({self.outer.describe()}, {self.inner.describe()})"


@dataclass(frozen=True)
class Iterate(MapExpr):
    """
    n-fold self-composition of base.

    Stored symbolically; evaluation unrolls lazily.
    """

    base: MapExpr
    n: int
    kind: ClassVar[MapKind] = MapKind.ITERATE

    def __post_init__(self) -> None:
        if isinstance(self.n, bool) or not isinstance(self.n, int):
            raise ParameterError(f"Iterate count must be an integer, got {self.n!r}")
        if self.n < 1:
            raise ParameterError(f"Iterate count must be >= 1, got {self.n}")

    def describe(self) -> str:
        return f"Iterate({self.base.describe()}, n={self.n})"


def negation_count(e: MapExpr) -> int:
    """
    Count Negate nodes along the value path, weighting iterated subtrees.

    The parity of the result is the orientation of a map built from
    increasing primitives: even means increasing.
    """
    if isinstance(e, Negate):
        return 1 + negation_count(e.inner)
    if isinstance(e, Compose):
        return negation_count(e.outer) + negation_count(e.inner)
    if isinstance(e, Iterate):
        return e.n * negation_count(e.base)
    return 0
