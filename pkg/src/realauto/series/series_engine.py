"""
Truncated Maclaurin expansions of the primitive families.

Each family is an unscaled base function of u = scale * x times a constant
prefactor:

    arctan  (a/b) arctan(u),        u = b x
    tan     (a/b) tan(u),           u = b x
    sin     sin(u),                 u = (pi/2) x
    erf     erf(u) / erf(k),        u = k x

Base coefficients are exact rationals and cached per (family, order).
"""

import math
from fractions import Fraction
from functools import lru_cache

from ..errors import DomainError, ParameterError
from ..family.erf import erf_series
from ..logging import series_logger
from ..models.map_expr import (
    ArctanFam,
    Cubic,
    ErfFam,
    Identity,
    MapExpr,
    MapKind,
    SinHalfPi,
    TanFam,
)
from ..models.series_expansion import SeriesExpansion
from ..utils.constants import HALF_PI, SERIES_ORDERS, TWO_OVER_SQRT_PI

logger = series_logger()


def _require_primitive(node: MapExpr) -> None:
    if not node.is_primitive:
        raise DomainError(
            f"Series are defined for primitive families only, got {node.describe()}"
        )


@lru_cache(maxsize=64)
def _arctan_base(order: int) -> tuple[Fraction, ...]:
    coeffs = [Fraction(0)] * (order + 1)
    for j in range(1, order + 1, 2):
        k = (j - 1) // 2
        coeffs[j] = Fraction((-1) ** k, j)
    return tuple(coeffs)


@lru_cache(maxsize=64)
def _tan_base(order: int) -> tuple[Fraction, ...]:
    # t' = 1 + t^2 gives (m+1) t_(m+1) = [m = 0] + sum_(i+j=m) t_i t_j
    t = [Fraction(0)] * (order + 1)
    for m in range(order):
        acc = Fraction(1) if m == 0 else Fraction(0)
        for i in range(1, m):
            if t[i] and t[m - i]:
                acc += t[i] * t[m - i]
        t[m + 1] = acc / (m + 1)
    return tuple(t)


@lru_cache(maxsize=64)
def _sin_base(order: int) -> tuple[Fraction, ...]:
    coeffs = [Fraction(0)] * (order + 1)
    for j in range(1, order + 1, 2):
        k = (j - 1) // 2
        coeffs[j] = Fraction((-1) ** k, math.factorial(j))
    return tuple(coeffs)


@lru_cache(maxsize=64)
def _erf_base(order: int) -> tuple[Fraction, ...]:
    # erf(u) = 2/sqrt(pi) * sum (-1)^n u^(2n+1) / (n! (2n+1)); the constant
    # 2/sqrt(pi) is carried by the prefactor
    coeffs = [Fraction(0)] * (order + 1)
    for j in range(1, order + 1, 2):
        n = (j - 1) // 2
        coeffs[j] = Fraction((-1) ** n, math.factorial(n) * j)
    return tuple(coeffs)


def _monomial_base(degree: int, order: int) -> tuple[Fraction, ...]:
    coeffs = [Fraction(0)] * (order + 1)
    if degree <= order:
        coeffs[degree] = Fraction(1)
    return tuple(coeffs)


def base_coefficients(kind: MapKind, order: int) -> tuple[Fraction, ...]:
    """
    Exact Maclaurin coefficients b_0..b_order of the unscaled base function.

    Raises:
        ParameterError: if order < 1
        DomainError: if kind is not a primitive family
    """
    if order < 1:
        raise ParameterError(f"Series order must be >= 1, got {order}")
    match kind:
        case MapKind.IDENTITY:
            return _monomial_base(1, order)
        case MapKind.CUBIC:
            return _monomial_base(3, order)
        case MapKind.ARCTAN:
            return _arctan_base(order)
        case MapKind.TAN:
            return _tan_base(order)
        case MapKind.SIN_HALF_PI:
            return _sin_base(order)
        case MapKind.ERF:
            return _erf_base(order)
    raise DomainError(f"No series for node kind {kind.value!r}")


def _scale_and_prefactor(node: MapExpr) -> tuple[float, float]:
    match node:
        case Identity() | Cubic():
            return 1.0, 1.0
        case SinHalfPi():
            return HALF_PI, 1.0
        case ArctanFam(a=a, b=b) | TanFam(a=a, b=b):
            return b, a / b
        case ErfFam(k=k):
            return k, TWO_OVER_SQRT_PI / erf_series(k)
    raise DomainError(f"No series for {node.describe()}")


def default_order(family: str | MapKind, orders: dict[str, int] | None = None) -> int:
    """
    Documented truncation order of a family.

    Args:
        family: Family name (identity, cubic, sin, arctan, tan, erf)
        orders: Optional override table, e.g. SeriesSettings.orders

    Raises:
        DomainError: if the family has no series
    """
    name = family.value if isinstance(family, MapKind) else family
    table = orders if orders is not None else SERIES_ORDERS
    if name not in table:
        raise DomainError(f"No series order for family {name!r}")
    return table[name]


def taylor(node: MapExpr, order: int | None = None) -> SeriesExpansion:
    """
    Truncated Maclaurin expansion of a primitive family.

    Args:
        node: Primitive MapExpr node
        order: Truncation order N (defaults to the family's documented order)

    Returns:
        SeriesExpansion with coefficients c_0..c_N

    Raises:
        DomainError: if node is Negate, Compose or Iterate
        ParameterError: if order < 1
    """
    _require_primitive(node)
    if order is None:
        order = default_order(node.kind)
    base = base_coefficients(node.kind, order)
    scale, prefactor = _scale_and_prefactor(node)
    expansion = SeriesExpansion(
        family=node.kind.value,
        order=order,
        base=base,
        scale=scale,
        prefactor=prefactor,
        radius=radius(node),
    )
    logger.debug(
        "Built series expansion",
        family=expansion.family,
        order=order,
        radius=expansion.radius,
    )
    return expansion


def eval_series(s: SeriesExpansion, x: float) -> float:
    """
    Evaluate the truncated series at x by Horner's scheme.

    The polynomial is evaluated in u = scale * x and multiplied by the
    prefactor, which equals sum c_j x^j without forming scale**j.
    """
    u = s.scale * x
    acc = 0.0
    for q in reversed(s.base):
        acc = acc * u + float(q)
    return s.prefactor * acc


def radius(node: MapExpr) -> float:
    """
    Radius of convergence of the Maclaurin series of a primitive family.

    Raises:
        DomainError: if node is not primitive
    """
    _require_primitive(node)
    match node:
        case ArctanFam(b=b):
            # nearest singularities of arctan(bx) at x = +-i/b
            return 1.0 / b
        case TanFam(b=b):
            return HALF_PI / b
    return math.inf


def _scaled_reference(kind: MapKind, order: int, c: Fraction) -> list[Fraction]:
    # Coefficients of base(c x) derived from the ODE or derivative of the
    # scaled function itself, without reference to the base table
    s = [Fraction(0)] * (order + 1)
    match kind:
        case MapKind.IDENTITY:
            if order >= 1:
                s[1] = c
        case MapKind.CUBIC:
            if order >= 3:
                s[3] = c**3
        case MapKind.ARCTAN:
            # d/dx arctan(c x) = c / (1 + c^2 x^2) = c sum (-c^2 x^2)^k
            for k in range((order - 1) // 2 + 1):
                s[2 * k + 1] = c * (-c * c) ** k / (2 * k + 1)
        case MapKind.TAN:
            # s = tan(c x) satisfies s' = c (1 + s^2)
            for m in range(order):
                acc = Fraction(1) if m == 0 else Fraction(0)
                for i in range(1, m):
                    if s[i] and s[m - i]:
                        acc += s[i] * s[m - i]
                s[m + 1] = c * acc / (m + 1)
        case MapKind.SIN_HALF_PI:
            # s = sin(c x) satisfies s'' = -c^2 s with s(0) = 0, s'(0) = c
            if order >= 1:
                s[1] = c
            for m in range(order - 1):
                s[m + 2] = -c * c * s[m] / ((m + 2) * (m + 1))
        case MapKind.ERF:
            # d/dx of the base at c x is c exp(-c^2 x^2)
            for n in range((order - 1) // 2 + 1):
                s[2 * n + 1] = c * (-c * c) ** n / (math.factorial(n) * (2 * n + 1))
    return s


def termwise_scaling_holds(s: SeriesExpansion) -> bool:
    """
    Check exactly that the scaled coefficients equal base_j * scale**j.

    The scaled series is recomputed in rational arithmetic from the scale
    (taken as the exact rational value of the stored float) and compared
    term by term with the stored base coefficients.
    """
    kind = MapKind(s.family)
    c = Fraction(s.scale)
    reference = _scaled_reference(kind, s.order, c)
    power = Fraction(1)
    for j, q in enumerate(s.base):
        if reference[j] != q * power:
            logger.warning(
                "Termwise scaling mismatch", family=s.family, index=j
            )
            return False
        power *= c
    return True
