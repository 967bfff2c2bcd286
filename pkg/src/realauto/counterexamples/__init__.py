"""Counterexample sequences: injective members, non-injective limits."""

from .sequences import (
    branch_jump,
    convergence_table,
    injectivity_witness,
    sample_sequence,
    seq_deriv,
    seq_eval,
    sup_norm_gap,
)

__all__ = [
    "seq_eval",
    "seq_deriv",
    "sup_norm_gap",
    "injectivity_witness",
    "convergence_table",
    "branch_jump",
    "sample_sequence",
]
