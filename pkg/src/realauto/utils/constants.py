"""Numerical constants shared across realauto."""

import math

HALF_PI: float = math.pi / 2.0

# Closed evaluation domain of every MapExpr
DOMAIN_LO: float = -1.0
DOMAIN_HI: float = 1.0

# Erf family shape parameter is restricted to (0, ERF_K_MAX]; beyond it the
# alternating Maclaurin sum loses more than 1e-12 to cancellation
ERF_K_MAX: float = 3.0
ERF_TERM_RTOL: float = 1e-17
ERF_MAX_TERMS: int = 200
TWO_OVER_SQRT_PI: float = 2.0 / math.sqrt(math.pi)

# Below this b the parameter constraints switch to their small-b series
SMALL_B_THRESHOLD: float = 1e-4

# Case II search interval is (margin, pi/2 - margin)
TAN_BRACKET_MARGIN: float = 1e-12

# TanFam endpoint error from one ulp of b* grows like 1/a; build warns above
# this (reached for a below about 3.5e-7)
TAN_ENDPOINT_WARN_TOL: float = 1e-9

DEFAULT_SOLVER_TOL: float = 1e-12
DEFAULT_MAX_ITER: int = 200

# exp(-1/x^2) underflows binary64 for x below this; the bump is flushed to 0
BUMP_FLUSH_THRESHOLD: float = 1.0 / math.sqrt(745.0)

# Consecutive values closer than this count as a collision
WITNESS_TOL: float = 1e-15

# Golden-section polish of the sup-norm argmax
GOLDEN_RATIO_CONJ: float = (math.sqrt(5.0) - 1.0) / 2.0
GOLDEN_TOL: float = 1e-14
GOLDEN_MAX_ITER: int = 200

# Per-family Maclaurin truncation orders (first dropped term at 0.8*radius
# stays below 1e-12)
SERIES_ORDERS: dict[str, int] = {
    "identity": 1,
    "cubic": 3,
    "arctan": 400,
    "tan": 140,
    "sin": 40,
    "erf": 80,
}

# Default CSV grid and open-interval margin for the CLI
DEFAULT_GRID: int = 2001
DEFAULT_EPS: float = 1e-6
DEFAULT_VERIFY_GRID: int = 10001

# Iteration table rows pass when the orbit product matches the power law to
# this relative gap
ITERATION_GAP_TOL: float = 1e-12
