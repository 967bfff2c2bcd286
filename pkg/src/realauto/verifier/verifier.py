"""
Numerical certification of automorphism properties.

A map passes when it is strictly monotone on the grid, sends the endpoints
of [-1, 1] to the endpoints, fixes the origin, has the claimed slope at 0,
agrees with a Richardson finite difference, and is odd. Surjectivity is not
sampled: endpoint values plus strict monotonicity give it through the
intermediate value theorem.
"""

import math

import numpy as np

from ..config.settings import ToleranceProfile
from ..errors import DomainError, ParameterError
from ..family.family_core import deriv, evaluate
from ..logging import log_execution_time, verifier_logger
from ..models.map_expr import MapExpr
from ..models.verification_report import CheckName, CheckResult, VerificationReport
from ..utils.constants import DOMAIN_HI, DOMAIN_LO

logger = verifier_logger()

REPORT_NOTES: tuple[str, ...] = (
    "surjectivity follows from endpoint values and strict monotonicity "
    "(intermediate value theorem); it is not sampled directly",
    "grid monotonicity cannot certify strictness between grid points",
    "deep iterates such as sin(pi x / 2) composed three or more times round to "
    "exactly +-1 near the endpoints in binary64; the equal neighbouring samples "
    "count as monotonicity violations even though the map is strictly monotone",
    "endpoints are checked on the closed interval [-1, 1]; the open interval "
    "(-1, 1) is then mapped onto itself by the same bijection",
)


def fd_derivative(e: MapExpr, x: float, step: float = 1e-5) -> float:
    """
    Richardson-extrapolated central difference of e at x.

    Returns (4 D(step/2) - D(step)) / 3 with
    D(s) = (e(x + s) - e(x - s)) / (2 s).

    Raises:
        ParameterError: if step <= 0
        DomainError: if the stencil leaves [-1, 1]
    """
    if not step > 0.0:
        raise ParameterError(f"step must be positive, got {step}")
    if x - step < DOMAIN_LO or x + step > DOMAIN_HI:
        raise DomainError(f"Stencil x +- {step} at x={x!r} leaves [-1, 1]")

    def central(s: float) -> float:
        return (evaluate(e, x + s) - evaluate(e, x - s)) / (2.0 * s)

    return (4.0 * central(0.5 * step) - central(step)) / 3.0


def _check(name: CheckName, measured: float, threshold: float) -> CheckResult:
    measured = float(measured)
    # NaN never passes
    return CheckResult(
        name=name,
        passed=measured <= threshold,
        measured=measured,
        threshold=float(threshold),
    )


def _orientation(e: MapExpr, a_claimed: float) -> float:
    if a_claimed > 0.0:
        return 1.0
    if a_claimed < 0.0:
        return -1.0
    return 1.0 if evaluate(e, DOMAIN_HI) - evaluate(e, DOMAIN_LO) >= 0.0 else -1.0


@log_execution_time(logger)
def verify(
    e: MapExpr,
    a_claimed: float,
    grid_n: int = 10001,
    tol_profile: ToleranceProfile | None = None,
    eps: float = 0.0,
) -> VerificationReport:
    """
    Verify that e behaves as an automorphism of (-1, 1) with slope a_claimed.

    Args:
        e: Map under test
        a_claimed: Claimed derivative at the origin
        grid_n: Uniform grid size over [-1+eps, 1-eps] (>= 3)
        tol_profile: Named tolerances (defaults to the default profile)
        eps: Grid margin; endpoint checks always use x = +-1

    Returns:
        VerificationReport; passes iff every check passes

    Raises:
        ParameterError: if grid_n < 3 or eps is outside [0, 0.1]
        DomainError: propagated from evaluation
    """
    if grid_n < 3:
        raise ParameterError(f"grid_n must be >= 3, got {grid_n}")
    if not 0.0 <= eps <= 0.1:
        raise ParameterError(f"eps must lie in [0, 0.1], got {eps}")
    if not math.isfinite(a_claimed):
        raise ParameterError(f"a_claimed must be finite, got {a_claimed}")
    profile = tol_profile or ToleranceProfile()

    direction = _orientation(e, a_claimed)
    xs = np.linspace(DOMAIN_LO + eps, DOMAIN_HI - eps, grid_n)
    ys = np.array([evaluate(e, float(x)) for x in xs])

    # Count consecutive pairs that are not strictly ordered along direction
    steps = np.diff(ys) * direction
    violations = int(np.count_nonzero(~(steps > 0.0)))

    f_plus = evaluate(e, DOMAIN_HI)
    f_minus = evaluate(e, DOMAIN_LO)
    origin = abs(evaluate(e, 0.0))
    slope_gap = abs(deriv(e, 0.0) - a_claimed)

    margin = 2.0 * profile.fd_step
    fd_xs = np.linspace(DOMAIN_LO + margin, DOMAIN_HI - margin, profile.fd_points)
    fd_gap = 0.0
    for x in fd_xs:
        x = float(x)
        analytic = deriv(e, x)
        numeric = fd_derivative(e, x, profile.fd_step)
        # relative gap, floored at unit scale where the slope vanishes
        fd_gap = max(fd_gap, abs(numeric - analytic) / max(abs(analytic), 1.0))

    mirrored = np.array([evaluate(e, -float(x)) for x in xs])
    oddness = float(np.max(np.abs(ys + mirrored)))

    checks = (
        _check(CheckName.MONOTONICITY, violations, 0.0),
        _check(CheckName.ENDPOINT_PLUS, abs(f_plus - direction), profile.endpoint),
        _check(CheckName.ENDPOINT_MINUS, abs(f_minus + direction), profile.endpoint),
        _check(CheckName.ORIGIN_FIXED, origin, profile.origin),
        _check(CheckName.DERIVATIVE_AT_ZERO, slope_gap, profile.derivative),
        _check(CheckName.FD_CONSISTENCY, fd_gap, profile.fd_relative),
        _check(CheckName.ODDNESS, oddness, profile.oddness),
    )
    report = VerificationReport(
        expr=e.describe(),
        a_claimed=a_claimed,
        checks=checks,
        grid_n=grid_n,
        epsilon_margin=eps,
        profile=profile.name,
        notes=REPORT_NOTES,
    )
    logger.info(
        "Verification finished",
        expr=report.expr,
        a_claimed=a_claimed,
        passed=report.passed,
        failed=[name.value for name in report.failed_checks],
    )
    return report
