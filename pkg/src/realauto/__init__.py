"""
realauto: real analytic automorphisms of (-1, 1) with a prescribed slope.

Builds maps with any derivative a at the origin (rescaled arctan for a > 1,
rescaled tan for 0 < a < 1, the cubic at 0, negation for a < 0), verifies
them numerically, expands the primitive families in Maclaurin series and
reproduces injective sequences whose uniform limits are not injective.
"""

from .counterexamples import injectivity_witness, seq_deriv, seq_eval, sup_norm_gap
from .family import compose, deriv, evaluate, invert, iterate
from .models import (
    ArctanFam,
    Compose,
    Cubic,
    ErfFam,
    Identity,
    Iterate,
    MapExpr,
    Negate,
    SeqFamily,
    SeqKind,
    SeriesExpansion,
    SinHalfPi,
    SolveResult,
    TanFam,
    VerificationReport,
)
from .series import eval_series, radius, taylor
from .solver import build_automorphism, solve_b_arctan, solve_b_tan
from .verifier import verify

__version__ = "1.0.0"

__all__ = [
    "build_automorphism",
    "solve_b_arctan",
    "solve_b_tan",
    "evaluate",
    "deriv",
    "compose",
    "iterate",
    "invert",
    "verify",
    "taylor",
    "eval_series",
    "radius",
    "seq_eval",
    "seq_deriv",
    "sup_norm_gap",
    "injectivity_witness",
    "MapExpr",
    "Identity",
    "Cubic",
    "SinHalfPi",
    "ArctanFam",
    "TanFam",
    "ErfFam",
    "Negate",
    "Compose",
    "Iterate",
    "SolveResult",
    "VerificationReport",
    "SeriesExpansion",
    "SeqFamily",
    "SeqKind",
]
