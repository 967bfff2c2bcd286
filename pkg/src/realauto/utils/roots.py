"""
Bisection-safeguarded Newton iteration for monotone scalar functions.

Used both to invert verified maps and to solve the family parameter
equations. The bracket [lo, hi] is maintained throughout, so convergence
only relies on a sign change, while Newton steps give the quadratic tail.
"""

import math
from collections.abc import Callable

from ..errors import ConvergenceError, NoBracketError
from ..models.solve_result import RootResult
from .constants import DEFAULT_MAX_ITER


def _sign(value: float) -> int:
    return (value > 0) - (value < 0)


def _collapsed(lo: float, hi: float) -> bool:
    return math.nextafter(lo, hi) >= hi


def solve_bracketed(
    func: Callable[[float], float],
    dfunc: Callable[[float], float],
    lo: float,
    hi: float,
    ftol: float,
    accept_tol: float | None = None,
    max_iter: int = DEFAULT_MAX_ITER,
) -> RootResult:
    """
    Find x in [lo, hi] with |func(x)| <= ftol.

    Args:
        func: Continuous function changing sign on [lo, hi]
        dfunc: Derivative of func (used for Newton steps only)
        lo: Lower bracket end
        hi: Upper bracket end
        ftol: Target residual
        accept_tol: Residual accepted once the bracket has shrunk to two
            adjacent floats (defaults to ftol)
        max_iter: Iteration cap

    Returns:
        RootResult with the root, residual, iteration count, final bracket
        and the evaluation trace

    Raises:
        NoBracketError: if func(lo) and func(hi) have the same sign
        ConvergenceError: if the cap is hit or the bracket collapses with
            the residual above accept_tol
    """
    if accept_tol is None:
        accept_tol = ftol
    if lo > hi:
        lo, hi = hi, lo

    trace: list[tuple[float, float]] = []

    def evaluate(x: float) -> float:
        value = func(x)
        trace.append((x, value))
        return value

    f_lo = evaluate(lo)
    if abs(f_lo) <= ftol:
        return RootResult(lo, abs(f_lo), 0, (lo, hi), tuple(trace))
    f_hi = evaluate(hi)
    if abs(f_hi) <= ftol:
        return RootResult(hi, abs(f_hi), 0, (lo, hi), tuple(trace))
    if _sign(f_lo) == _sign(f_hi):
        raise NoBracketError(
            f"No sign change on [{lo!r}, {hi!r}]: f(lo)={f_lo!r}, f(hi)={f_hi!r}"
        )

    increasing = f_lo < 0.0
    best_x, best_f = (lo, f_lo) if abs(f_lo) <= abs(f_hi) else (hi, f_hi)
    x = 0.5 * (lo + hi)

    for iteration in range(1, max_iter + 1):
        fx = evaluate(x)
        if abs(fx) <= abs(best_f):
            best_x, best_f = x, fx
        if abs(fx) <= ftol:
            return RootResult(x, abs(fx), iteration, (lo, hi), tuple(trace))

        # Maintain the bracket on the root
        if (fx < 0.0) == increasing:
            lo = x
        else:
            hi = x

        if _collapsed(lo, hi):
            if abs(best_f) <= accept_tol:
                return RootResult(
                    best_x, abs(best_f), iteration, (lo, hi), tuple(trace)
                )
            raise ConvergenceError(
                f"Bracket collapsed at {best_x!r} with residual {abs(best_f)!r} "
                f"above {accept_tol!r}"
            )

        slope = dfunc(x)
        candidate = math.nan
        if slope != 0.0 and math.isfinite(slope):
            candidate = x - fx / slope
            if candidate == x:
                # Newton step below one ulp: try the neighbour towards the root
                toward = hi if (fx < 0.0) == increasing else lo
                candidate = math.nextafter(x, toward)

        # Bisect when Newton leaves the bracket or fails
        if not (lo < candidate < hi):
            candidate = lo + 0.5 * (hi - lo)
        x = candidate

    if abs(best_f) <= accept_tol:
        return RootResult(best_x, abs(best_f), max_iter, (lo, hi), tuple(trace))
    raise ConvergenceError(
        f"No convergence after {max_iter} iterations; best residual {abs(best_f)!r}"
    )
