"""
Evaluation, differentiation and combinators for MapExpr trees.

Derivatives are exact and structural: closed forms at the primitives, the
chain rule at Compose and Iterate nodes. Nothing here holds mutable state.
"""

import math

from ..errors import DomainError, ParameterError
from ..models.curve_sample import CurveSample
from ..models.map_expr import (
    ArctanFam,
    Compose,
    Cubic,
    ErfFam,
    Identity,
    Iterate,
    MapExpr,
    Negate,
    SinHalfPi,
    TanFam,
)
from ..models.solve_result import RootResult
from ..utils.constants import (
    DEFAULT_MAX_ITER,
    DEFAULT_SOLVER_TOL,
    DOMAIN_HI,
    DOMAIN_LO,
    HALF_PI,
    TWO_OVER_SQRT_PI,
)
from ..utils.grid import symmetric_grid
from ..utils.roots import solve_bracketed
from .erf import erf_series, erf_slope


def _check_domain(x: float) -> None:
    if not DOMAIN_LO <= x <= DOMAIN_HI:
        raise DomainError(f"x must lie in [-1, 1], got {x!r}")


def _value(e: MapExpr, x: float) -> float:
    match e:
        case Identity():
            return x
        case Cubic():
            return x * x * x
        case SinHalfPi():
            return math.sin(HALF_PI * x)
        case ArctanFam(a=a, b=b):
            return (a / b) * math.atan(b * x)
        case TanFam(a=a, b=b):
            return (a / b) * math.tan(b * x)
        case ErfFam(k=k):
            return erf_series(k * x) / erf_series(k)
        case Negate(inner=inner):
            return -_value(inner, x)
        case Compose(outer=outer, inner=inner):
            return _value(outer, _value(inner, x))
        case Iterate(base=base, n=n):
            for _ in range(n):
                x = _value(base, x)
            return x
    raise TypeError(f"Unknown expression node: {e!r}")


def _slope(e: MapExpr, x: float) -> float:
    match e:
        case Identity():
            return 1.0
        case Cubic():
            return 3.0 * x * x
        case SinHalfPi():
            return HALF_PI * math.cos(HALF_PI * x)
        case ArctanFam(a=a, b=b):
            bx = b * x
            return a / (1.0 + bx * bx)
        case TanFam(a=a, b=b):
            c = math.cos(b * x)
            return a / (c * c)
        case ErfFam(k=k):
            kx = k * x
            return TWO_OVER_SQRT_PI * k / erf_series(k) * math.exp(-kx * kx)
        case Negate(inner=inner):
            return -_slope(inner, x)
        case Compose(outer=outer, inner=inner):
            return _slope(outer, _value(inner, x)) * _slope(inner, x)
        case Iterate(base=base, n=n):
            if x == 0.0:
                # The origin is fixed, so slopes multiply: h_n'(0) = h'(0)^n
                return _slope(base, 0.0) ** n
            product = 1.0
            for _ in range(n):
                product *= _slope(base, x)
                x = _value(base, x)
            return product
    raise TypeError(f"Unknown expression node: {e!r}")


def evaluate(e: MapExpr, x: float) -> float:
    """
    Evaluate the map denoted by e at x in [-1, 1].

    Raises:
        DomainError: if x lies outside [-1, 1]
    """
    _check_domain(x)
    return _value(e, x)


def deriv(e: MapExpr, x: float) -> float:
    """
    Exact derivative of e at x in [-1, 1] via closed forms and the chain rule.

    Raises:
        DomainError: if x lies outside [-1, 1]
    """
    _check_domain(x)
    return _slope(e, x)


def compose(outer: MapExpr, inner: MapExpr) -> MapExpr:
    """outer o inner"""
    return Compose(outer=outer, inner=inner)


def iterate(base: MapExpr, n: int) -> MapExpr:
    """
    n-fold self-composition h_n with h_1 = base and h_n = base o h_(n-1).

    Raises:
        ParameterError: if n < 1
    """
    return Iterate(base=base, n=n)


def invert(
    e: MapExpr,
    y: float,
    tol: float = DEFAULT_SOLVER_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> float:
    """
    Solve e(x) = y for x in [-1, 1].

    e must be strictly monotone on [-1, 1]; the search is bisection on
    [-1, 1] refined by safeguarded Newton steps.

    Raises:
        NoBracketError: if y is outside the range of e over [-1, 1]
        ConvergenceError: if |e(x) - y| <= tol is not reached
    """
    return invert_with_diagnostics(e, y, tol, max_iter).root


def invert_with_diagnostics(
    e: MapExpr,
    y: float,
    tol: float = DEFAULT_SOLVER_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> RootResult:
    """Same as invert, returning the full root-search result."""
    return solve_bracketed(
        lambda x: _value(e, x) - y,
        lambda x: _slope(e, x),
        DOMAIN_LO,
        DOMAIN_HI,
        ftol=tol,
        max_iter=max_iter,
    )


def analytic_slope_at_origin(e: MapExpr) -> float:
    """f'(0) of the denoted map."""
    return _slope(e, 0.0)


def erf_slope_at_origin(k: float) -> float:
    """f_k'(0) = 2k / (sqrt(pi) erf(k)) of the erf family."""
    return erf_slope(k)


def sample_curve(e: MapExpr, grid_n: int, eps: float = 0.0) -> CurveSample:
    """
    Sample (x, f(x), f'(x)) on a symmetric uniform grid over [-1+eps, 1-eps].

    Args:
        e: Map to sample
        grid_n: Number of grid points (>= 2)
        eps: Margin kept away from the endpoints

    Returns:
        CurveSample with the sampled triples
    """
    if grid_n < 2:
        raise ParameterError(f"grid_n must be >= 2, got {grid_n}")
    if not 0.0 <= eps < 1.0:
        raise ParameterError(f"eps must lie in [0, 1), got {eps}")
    xs = symmetric_grid(grid_n, eps)
    xs_list = tuple(float(x) for x in xs)
    return CurveSample(
        xs=xs_list,
        ys=tuple(_value(e, x) for x in xs_list),
        dys=tuple(_slope(e, x) for x in xs_list),
        description=e.describe(),
        eps=eps,
    )


def iteration_table(base: MapExpr, n_max: int) -> list[dict[str, float]]:
    """
    Slope at the origin of h_1..h_n_max against the power law h'(0)^n.

    Returns:
        Rows {n, deriv_at_zero, power_law, relative_gap}
    """
    if n_max < 1:
        raise ParameterError(f"n_max must be >= 1, got {n_max}")
    h1 = _slope(base, 0.0)
    rows = []
    for n in range(1, n_max + 1):
        # Chain rule along the orbit of 0, independent of the power-law shortcut
        product = 1.0
        x = 0.0
        for _ in range(n):
            product *= _slope(base, x)
            x = _value(base, x)
        try:
            power_law = h1**n
        except OverflowError:
            power_law = math.copysign(math.inf, h1)
        gap = abs(product - power_law) / abs(power_law) if power_law else abs(product)
        rows.append(
            {
                "n": n,
                "deriv_at_zero": product,
                "power_law": power_law,
                "relative_gap": gap,
            }
        )
    return rows
