"""
Injective function sequences whose uniform limits are not injective.

Two sequences on (-1, 1):

    bump       f_n(x) = f(x) + x/n with f(x) = exp(-1/x^2) for x > 0, else 0
    piecewise  g_n(x) = -x^3/(3n) - x^2/(2n) on (-1, 0], x^2/2 on [0, 1)

Every finite member is strictly increasing; the limits f and g are constant
on (-1, 0] but not constant overall. The limits are not analytic and are
kept out of the MapExpr algebra.
"""

import math
from collections.abc import Callable, Iterable

import numpy as np

from ..errors import DomainError, ParameterError
from ..logging import counterexample_logger
from ..models.curve_sample import CurveSample
from ..models.seq_family import SeqFamily, SeqKind
from ..utils.constants import (
    BUMP_FLUSH_THRESHOLD,
    GOLDEN_MAX_ITER,
    GOLDEN_RATIO_CONJ,
    GOLDEN_TOL,
    WITNESS_TOL,
)
from ..utils.grid import symmetric_grid

# Default sup-norm interval stays this far inside (-1, 1)
SUP_NORM_MARGIN: float = 1e-9
DEFAULT_SUP_GRID: int = 10001
DEFAULT_WITNESS_GRID: int = 10000


def _check_open_domain(x: float) -> None:
    if not -1.0 < x < 1.0:
        raise DomainError(f"x must lie in the open interval (-1, 1), got {x!r}")


def _bump(x: float) -> float:
    # exp(-1/x^2) underflows below the threshold; flushed to an exact 0
    if x <= BUMP_FLUSH_THRESHOLD:
        return 0.0
    return math.exp(-1.0 / (x * x))


def _bump_slope(x: float) -> float:
    if x <= BUMP_FLUSH_THRESHOLD:
        return 0.0
    return 2.0 / (x * x * x) * math.exp(-1.0 / (x * x))


def _left_value(s: SeqFamily, x: float) -> float:
    if s.kind is SeqKind.FLAT_BUMP:
        return 0.0 if s.is_limit else x / s.n
    if s.is_limit:
        return 0.0
    return -(x * x * x) / (3.0 * s.n) - (x * x) / (2.0 * s.n)


def _right_value(s: SeqFamily, x: float) -> float:
    if s.kind is SeqKind.FLAT_BUMP:
        return _bump(x) if s.is_limit else _bump(x) + x / s.n
    return 0.5 * x * x


def _left_slope(s: SeqFamily, x: float) -> float:
    if s.is_limit:
        return 0.0
    if s.kind is SeqKind.FLAT_BUMP:
        return 1.0 / s.n
    return -x * (x + 1.0) / s.n


def _right_slope(s: SeqFamily, x: float) -> float:
    if s.kind is SeqKind.FLAT_BUMP:
        return _bump_slope(x) if s.is_limit else _bump_slope(x) + 1.0 / s.n
    return x


def seq_eval(s: SeqFamily, x: float) -> float:
    """
    Value of a sequence member at x in (-1, 1).

    Raises:
        DomainError: if x is outside the open interval
    """
    _check_open_domain(x)
    return _left_value(s, x) if x <= 0.0 else _right_value(s, x)


def seq_deriv(s: SeqFamily, x: float) -> float:
    """
    Derivative of a sequence member at x in (-1, 1).

    Both one-sided derivatives vanish at x = 0 for the piecewise family, and
    the bump contributes 0 there, so the left branch formula is used at 0.

    Raises:
        DomainError: if x is outside the open interval
    """
    _check_open_domain(x)
    return _left_slope(s, x) if x <= 0.0 else _right_slope(s, x)


def branch_jump(s: SeqFamily) -> dict[str, float]:
    """One-sided value and derivative jumps of s at x = 0."""
    return {
        "value_jump": abs(_right_value(s, 0.0) - _left_value(s, 0.0)),
        "deriv_jump": abs(_right_slope(s, 0.0) - _left_slope(s, 0.0)),
    }


def _default_interval() -> tuple[float, float]:
    return (-1.0 + SUP_NORM_MARGIN, 1.0 - SUP_NORM_MARGIN)


def _golden_max(
    func: Callable[[float], float], lo: float, hi: float
) -> tuple[float, float]:
    """Golden-section search for the maximum of a unimodal func on [lo, hi]."""
    c = hi - GOLDEN_RATIO_CONJ * (hi - lo)
    d = lo + GOLDEN_RATIO_CONJ * (hi - lo)
    fc, fd = func(c), func(d)
    for _ in range(GOLDEN_MAX_ITER):
        if hi - lo <= GOLDEN_TOL * max(1.0, abs(lo) + abs(hi)):
            break
        if fc >= fd:
            hi, d, fd = d, c, fc
            c = hi - GOLDEN_RATIO_CONJ * (hi - lo)
            fc = func(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + GOLDEN_RATIO_CONJ * (hi - lo)
            fd = func(d)
    return (c, fc) if fc >= fd else (d, fd)


def sup_norm_gap(
    kind: SeqKind,
    n: float,
    interval: tuple[float, float] | None = None,
    grid_m: int = DEFAULT_SUP_GRID,
) -> float:
    """
    Sup-norm distance between the n-th member and the limit over an interval.

    The maximum over a uniform grid is refined by a golden-section search on
    the two grid cells around the grid argmax.

    Args:
        kind: Sequence kind
        n: Member index (positive integer or math.inf)
        interval: [lo, hi] inside (-1, 1); defaults to (-1, 1) shrunk by 1e-9
        grid_m: Number of grid points (>= 2)

    Raises:
        ParameterError: if grid_m < 2 or lo >= hi
        DomainError: if the interval leaves (-1, 1)
    """
    if grid_m < 2:
        raise ParameterError(f"grid_m must be >= 2, got {grid_m}")
    lo, hi = interval if interval is not None else _default_interval()
    if not lo < hi:
        raise ParameterError(f"Empty interval [{lo}, {hi}]")
    _check_open_domain(lo)
    _check_open_domain(hi)

    member = SeqFamily(kind=kind, n=n)
    limit = SeqFamily.limit(kind)
    if member.is_limit:
        return 0.0

    def gap(x: float) -> float:
        return abs(seq_eval(member, x) - seq_eval(limit, x))

    xs = np.linspace(lo, hi, grid_m)
    gaps = np.array([gap(float(x)) for x in xs])
    i = int(np.argmax(gaps))
    best = float(gaps[i])
    left = float(xs[max(i - 1, 0)])
    right = float(xs[min(i + 1, grid_m - 1)])
    _, polished = _golden_max(gap, left, right)
    result = max(best, polished)

    counterexample_logger(kind.value).debug(
        "Computed sup-norm gap",
        n=member.describe(),
        interval=[lo, hi],
        grid_m=grid_m,
        gap=result,
    )
    return result


def injectivity_witness(
    kind: SeqKind,
    n: float,
    grid_m: int = DEFAULT_WITNESS_GRID,
    eps: float = 1e-6,
) -> tuple[float, float] | None:
    """
    Find two grid points where the member fails to be strictly increasing.

    Args:
        kind: Sequence kind
        n: Member index (positive integer or math.inf)
        grid_m: Number of grid points over [-1+eps, 1-eps] (>= 3)
        eps: Margin inside the open interval

    Returns:
        (x1, x2) with x1 < x2 and f(x2) - f(x1) <= 1e-15, or None when the
        sampled values are strictly increasing
    """
    if grid_m < 3:
        raise ParameterError(f"grid_m must be >= 3, got {grid_m}")
    if not 0.0 < eps < 1.0:
        raise ParameterError(f"eps must lie in (0, 1), got {eps}")
    s = SeqFamily(kind=kind, n=n)
    xs = np.linspace(-1.0 + eps, 1.0 - eps, grid_m)
    ys = np.array([seq_eval(s, float(x)) for x in xs])
    flat = np.flatnonzero(np.diff(ys) <= WITNESS_TOL)
    if flat.size == 0:
        return None
    i = int(flat[0])
    witness = (float(xs[i]), float(xs[i + 1]))
    counterexample_logger(kind.value).info(
        "Injectivity witness found", n=s.describe(), witness=list(witness)
    )
    return witness


def convergence_table(
    kind: SeqKind,
    ns: Iterable[int],
    interval: tuple[float, float] | None = None,
    grid_m: int = DEFAULT_SUP_GRID,
) -> list[dict[str, float]]:
    """Rows {n, sup_norm_gap} for the given member indices."""
    return [
        {"n": n, "sup_norm_gap": sup_norm_gap(kind, n, interval, grid_m)}
        for n in ns
    ]


def sample_sequence(s: SeqFamily, grid_n: int, eps: float) -> CurveSample:
    """
    Sample (x, f(x), f'(x)) of a sequence member over [-1+eps, 1-eps].

    Raises:
        ParameterError: if grid_n < 2 or eps is outside (0, 1)
    """
    if grid_n < 2:
        raise ParameterError(f"grid_n must be >= 2, got {grid_n}")
    if not 0.0 < eps < 1.0:
        raise ParameterError(f"eps must lie in (0, 1) for open-interval families, got {eps}")
    xs = tuple(float(x) for x in symmetric_grid(grid_n, eps))
    return CurveSample(
        xs=xs,
        ys=tuple(seq_eval(s, x) for x in xs),
        dys=tuple(seq_deriv(s, x) for x in xs),
        description=s.describe(),
        eps=eps,
        meta={"kind": s.kind.value},
    )
