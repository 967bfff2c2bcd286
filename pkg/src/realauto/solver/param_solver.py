"""
Parameter solver for the prescribed-derivative construction.

For a > 1 the map (a/b) arctan(b x) fixes the endpoints exactly when
b / arctan(b) = a; for 0 < a < 1 the map (a/b) tan(b x) does so when
b / tan(b) = a with 0 < b < pi/2. Both constraints are monotone in b, so a
bracketed Newton search finds the unique b*.
"""

import math

from ..errors import ParameterError
from ..logging import log_execution_time, solver_logger
from ..models.map_expr import ArctanFam, Cubic, Identity, MapExpr, Negate, TanFam
from ..models.solve_result import SolverCase, SolveResult
from ..utils.constants import (
    DEFAULT_MAX_ITER,
    DEFAULT_SOLVER_TOL,
    HALF_PI,
    SMALL_B_THRESHOLD,
    TAN_BRACKET_MARGIN,
    TAN_ENDPOINT_WARN_TOL,
)
from ..utils.roots import solve_bracketed

logger = solver_logger()

# Doubling b from 1 reaches the binary64 range after ~1024 steps
_MAX_DOUBLINGS = 1100

# Newton aims this factor below the requested residual so that b* itself is
# resolved to about tol; the requested residual is still accepted once the
# bracket has collapsed
_TIGHTENING = 1e-2


def arctan_constraint(b: float) -> float:
    """h(b) = b / arctan(b), continuously extended by h(0) = 1."""
    if abs(b) < SMALL_B_THRESHOLD:
        b2 = b * b
        return 1.0 + b2 / 3.0 - 4.0 * b2 * b2 / 45.0
    return b / math.atan(b)


def arctan_constraint_slope(b: float) -> float:
    """h'(b) = (arctan(b) - b / (1 + b^2)) / arctan(b)^2."""
    if abs(b) < SMALL_B_THRESHOLD:
        return 2.0 * b / 3.0 - 16.0 * b * b * b / 45.0
    t = math.atan(b)
    return (t - b / (1.0 + b * b)) / (t * t)


def tan_constraint(b: float) -> float:
    """k(b) = b / tan(b), continuously extended by k(0) = 1."""
    if abs(b) < SMALL_B_THRESHOLD:
        b2 = b * b
        return 1.0 - b2 / 3.0 - b2 * b2 / 45.0
    return b / math.tan(b)


def tan_constraint_slope(b: float) -> float:
    """k'(b) = (sin(b) cos(b) - b) / sin(b)^2."""
    if abs(b) < SMALL_B_THRESHOLD:
        return -2.0 * b / 3.0 - 4.0 * b * b * b / 45.0
    s = math.sin(b)
    return (s * math.cos(b) - b) / (s * s)


def _require_tol(tol: float) -> None:
    if not (tol > 0.0 and math.isfinite(tol)):
        raise ParameterError(f"tol must be positive and finite, got {tol}")


def solve_b_arctan(
    a: float,
    tol: float = DEFAULT_SOLVER_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> SolveResult:
    """
    Solve b / arctan(b) = a for b* > 0.

    Args:
        a: Target derivative, a > 1
        tol: Relative residual target; |h(b*) - a| <= tol * max(1, a)
        max_iter: Iteration cap of the refinement

    Returns:
        SolveResult for Case I

    Raises:
        ParameterError: if a <= 1, a is not finite, or tol <= 0
        ConvergenceError: if the refinement does not converge
    """
    _require_tol(tol)
    if not math.isfinite(a) or a <= 1.0:
        raise ParameterError(f"solve_b_arctan requires finite a > 1, got {a}")

    # h is increasing from 1 at b = 0; double hi until it passes a
    lo, hi = 0.0, 1.0
    for _ in range(_MAX_DOUBLINGS):
        if arctan_constraint(hi) >= a:
            break
        lo, hi = hi, 2.0 * hi
    else:
        raise ParameterError(f"a = {a} is beyond the representable bracket")

    ftol = tol * max(1.0, a)
    root = solve_bracketed(
        lambda b: arctan_constraint(b) - a,
        arctan_constraint_slope,
        lo,
        hi,
        ftol=_TIGHTENING * ftol,
        accept_tol=ftol,
        max_iter=max_iter,
    )
    result = SolveResult(
        case=SolverCase.ARCTAN,
        a=a,
        b_star=root.root,
        residual=abs(arctan_constraint(root.root) - a),
        iterations=root.iterations,
        bracket=root.bracket,
        trace=tuple((b, g + a) for b, g in root.trace),
    )
    logger.debug(
        "Solved family parameter",
        case=result.case.value,
        a=a,
        b_star=result.b_star,
        residual=result.residual,
        iterations=result.iterations,
    )
    return result


def solve_b_tan(
    a: float,
    tol: float = DEFAULT_SOLVER_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    margin: float = TAN_BRACKET_MARGIN,
) -> SolveResult:
    """
    Solve b / tan(b) = a for b* in (0, pi/2).

    The search aims well below |k(b*) - a| = tol * a so that the endpoint error
    |g(1) - 1| = |k(b*) - a| / a stays at the tol level, and accepts
    |k(b*) - a| <= tol once binary64 resolution in b is exhausted.

    Args:
        a: Target derivative, 0 < a < 1
        tol: Absolute residual bound
        max_iter: Iteration cap of the refinement
        margin: The search runs on (margin, pi/2 - margin)

    Returns:
        SolveResult for Case II

    Raises:
        ParameterError: if a is outside (0, 1) or tol <= 0
        NoBracketError: if a is below k(pi/2 - margin)
        ConvergenceError: if the refinement does not converge
    """
    _require_tol(tol)
    if not 0.0 < a < 1.0:
        raise ParameterError(f"solve_b_tan requires 0 < a < 1, got {a}")

    root = solve_bracketed(
        lambda b: tan_constraint(b) - a,
        tan_constraint_slope,
        margin,
        HALF_PI - margin,
        ftol=_TIGHTENING * tol * a,
        accept_tol=tol,
        max_iter=max_iter,
    )
    result = SolveResult(
        case=SolverCase.TAN,
        a=a,
        b_star=root.root,
        residual=abs(tan_constraint(root.root) - a),
        iterations=root.iterations,
        bracket=root.bracket,
        trace=tuple((b, g + a) for b, g in root.trace),
    )
    logger.debug(
        "Solved family parameter",
        case=result.case.value,
        a=a,
        b_star=result.b_star,
        residual=result.residual,
        iterations=result.iterations,
    )
    return result


def tan_endpoint_resolution(a: float, b: float) -> float:
    """
    Change in (a/b) tan(b) at x = 1 when b moves by one ulp.

    This bounds the endpoint accuracy of TanFam(a, b) in binary64. For small a
    it is about (pi/2) ulp(b) / a, so b/tan(b) = a cannot be resolved finely
    enough to keep f(1) within 1e-9 of 1 once a drops below about 3.5e-7.
    """
    return math.ulp(b) * (a / b) / math.cos(b) ** 2


@log_execution_time(logger)
def build_automorphism(
    a: float,
    tol: float = DEFAULT_SOLVER_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    margin: float = TAN_BRACKET_MARGIN,
) -> MapExpr:
    """
    Build a real analytic automorphism of (-1, 1) with derivative a at 0.

    Case split:
        a < 0      -> Negate(build(-a))
        a = 0      -> Cubic
        a = 1      -> Identity
        a > 1      -> ArctanFam(a, b*) with b* / arctan(b*) = a
        0 < a < 1  -> TanFam(a, b*) with b* / tan(b*) = a

    For 0 < a below about 3.5e-7, b* sits within binary64 resolution of pi/2
    and |f(1) - 1| can exceed 1e-9 (up to about 3.5e-8 at a = 1e-8). The map is still
    built; a warning reports the estimated endpoint error.

    Raises:
        ParameterError: if a is not finite
        NoBracketError, ConvergenceError: propagated from the solvers
    """
    if not math.isfinite(a):
        raise ParameterError(f"a must be finite, got {a}")

    if a < 0.0:
        return Negate(inner=build_automorphism(-a, tol, max_iter, margin))
    if a == 0.0:
        return Cubic()
    if a == 1.0:
        return Identity()
    if a > 1.0:
        solved = solve_b_arctan(a, tol, max_iter)
        return ArctanFam(a=a, b=solved.b_star)
    solved = solve_b_tan(a, tol, max_iter, margin)
    endpoint_error = tan_endpoint_resolution(a, solved.b_star)
    if endpoint_error > TAN_ENDPOINT_WARN_TOL:
        logger.warning(
            "Endpoint accuracy limited by binary64 resolution of b",
            a=a,
            b_star=solved.b_star,
            endpoint_error=endpoint_error,
        )
    return TanFam(a=a, b=solved.b_star)
