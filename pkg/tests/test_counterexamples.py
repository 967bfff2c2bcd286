"""Tests for the injective sequences with non-injective limits."""

import math

import numpy as np
import pytest

from src.realauto.counterexamples import (
    branch_jump,
    convergence_table,
    injectivity_witness,
    sample_sequence,
    seq_deriv,
    seq_eval,
    sup_norm_gap,
)
from src.realauto.errors import DomainError, ParameterError
from src.realauto.models import SeqFamily, SeqKind, parse_seq_index

BUMP = SeqKind.FLAT_BUMP
PIECEWISE = SeqKind.PIECEWISE_CUBIC


class TestSeqFamily:
    """Member construction and index parsing."""

    @pytest.mark.parametrize("n", [0, -3, 2.5, True, math.nan])
    def test_rejects_bad_index(self, n):
        """Indices are positive integers or inf."""
        with pytest.raises(ParameterError):
            SeqFamily(kind=BUMP, n=n)

    def test_limit_member(self):
        """The limit member has n = inf."""
        s = SeqFamily.limit(PIECEWISE)
        assert s.is_limit
        assert s.describe() == "piecewise[n=inf]"
        assert SeqFamily(kind=BUMP, n=7).describe() == "bump[n=7]"

    @pytest.mark.parametrize(
        ("raw", "expected"),
        [("5", 5), (" 12 ", 12), ("inf", math.inf), ("INF", math.inf), ("∞", math.inf), (3, 3)],
    )
    def test_parse_index(self, raw, expected):
        """Integers, 'inf' and the infinity sign are accepted."""
        assert parse_seq_index(raw) == expected

    @pytest.mark.parametrize("raw", ["0", "-1", "2.5", "abc", ""])
    def test_parse_rejects(self, raw):
        """Anything else is a ParameterError."""
        with pytest.raises(ParameterError):
            parse_seq_index(raw)


class TestEvaluation:
    """Branch values and derivatives."""

    def test_bump_member(self):
        """f_n = x/n on the left, exp(-1/x^2) + x/n on the right."""
        s = SeqFamily(kind=BUMP, n=2)
        assert seq_eval(s, -0.5) == -0.25
        assert seq_eval(s, 0.5) == pytest.approx(math.exp(-4.0) + 0.25, rel=1e-15)
        assert seq_deriv(s, -0.5) == 0.5
        assert seq_deriv(s, 0.5) == pytest.approx(16.0 * math.exp(-4.0) + 0.5, rel=1e-15)

    def test_piecewise_member(self):
        """g_3(-1/2) = -1/36 and g_3(1/2) = 1/8."""
        s = SeqFamily(kind=PIECEWISE, n=3)
        assert seq_eval(s, -0.5) == pytest.approx(-1 / 36, rel=1e-15)
        assert seq_eval(s, 0.5) == 0.125
        assert seq_deriv(s, -0.5) == pytest.approx(1 / 12, rel=1e-15)
        assert seq_deriv(s, 0.5) == 0.5

    def test_limits_are_flat_on_the_left(self):
        """Both limits vanish identically on (-1, 0]."""
        for kind in (BUMP, PIECEWISE):
            limit = SeqFamily.limit(kind)
            for x in np.linspace(-0.999, 0.0, 50):
                assert seq_eval(limit, float(x)) == 0.0
                assert seq_deriv(limit, float(x)) == 0.0

    def test_bump_flush_near_origin(self):
        """exp(-1/x^2) is negligible below 0.038 and exactly 0 for x <= 0."""
        limit = SeqFamily.limit(BUMP)
        for x in np.linspace(1e-6, 0.0379, 200):
            assert 0.0 <= seq_eval(limit, float(x)) < 1e-300
        assert seq_eval(limit, 0.0) == 0.0
        assert seq_eval(limit, -1e-3) == 0.0

    @pytest.mark.parametrize("x", [-1.0, 1.0, 1.5, math.nan])
    def test_outside_open_interval(self, x):
        """Evaluation is restricted to (-1, 1)."""
        s = SeqFamily(kind=PIECEWISE, n=1)
        with pytest.raises(DomainError):
            seq_eval(s, x)
        with pytest.raises(DomainError):
            seq_deriv(s, x)

    @pytest.mark.parametrize("kind", [BUMP, PIECEWISE])
    @pytest.mark.parametrize("n", [1, 5, math.inf])
    def test_branches_join_smoothly(self, kind, n):
        """Value and first derivative are continuous at 0."""
        jumps = branch_jump(SeqFamily(kind=kind, n=n))
        assert jumps == {"value_jump": 0.0, "deriv_jump": 0.0}

    @pytest.mark.parametrize("kind", [BUMP, PIECEWISE])
    def test_members_strictly_increasing(self, kind):
        """Positive derivatives away from the endpoints of (-1, 0]."""
        s = SeqFamily(kind=kind, n=4)
        for x in np.linspace(-0.99, 0.99, 397):
            x = float(x)
            if x != 0.0:
                assert seq_deriv(s, x) > 0.0


class TestSupNormGap:
    """Uniform distance to the limit."""

    def test_bump_gap(self):
        """sup |x/n| on [-0.99, 0.99] is 0.99/n for n = 1..100."""
        for n in range(1, 101):
            assert sup_norm_gap(BUMP, n, (-0.99, 0.99)) == pytest.approx(
                0.99 / n, abs=1e-12
            )

    def test_piecewise_gap(self):
        """sup |g_n - g| on (-1, 1) is 1/(6n) for n = 1..100."""
        for n in range(1, 101):
            assert sup_norm_gap(PIECEWISE, n, grid_m=2001) == pytest.approx(
                1 / (6 * n), abs=1e-9
            )

    @pytest.mark.parametrize("kind", [BUMP, PIECEWISE])
    def test_limit_gap_is_zero(self, kind):
        """The limit is at distance 0 from itself."""
        assert sup_norm_gap(kind, math.inf) == 0.0

    def test_gap_decreases_with_n(self):
        """The gaps shrink like 1/n."""
        gaps = [sup_norm_gap(BUMP, n, grid_m=501) for n in (1, 2, 4, 8)]
        assert all(later < earlier for earlier, later in zip(gaps, gaps[1:]))

    @pytest.mark.parametrize(
        ("interval", "grid_m", "error"),
        [
            ((0.5, 0.5), 101, ParameterError),
            ((0.6, 0.2), 101, ParameterError),
            ((-0.5, 0.5), 1, ParameterError),
            ((-1.0, 0.5), 101, DomainError),
            ((-0.5, 1.0), 101, DomainError),
        ],
    )
    def test_rejects_bad_arguments(self, interval, grid_m, error):
        """Intervals must be non-empty and inside (-1, 1)."""
        with pytest.raises(error):
            sup_norm_gap(BUMP, 3, interval, grid_m)


class TestInjectivityWitness:
    """Detection of lost injectivity."""

    @pytest.mark.parametrize("kind", [BUMP, PIECEWISE])
    def test_members_have_no_witness(self, kind):
        """No flat pair for n = 1..100 on a 10^4 grid."""
        for n in range(1, 101):
            assert injectivity_witness(kind, n, 10_000) is None

    def test_bump_limit_witness(self):
        """The bump limit is constant on the left half."""
        witness = injectivity_witness(BUMP, math.inf, 10_000)
        assert witness is not None
        x1, x2 = witness
        assert x1 < x2 <= 0.0

    def test_piecewise_limit_witness(self):
        """The piecewise limit has its witness inside (-1, 0]."""
        witness = injectivity_witness(PIECEWISE, math.inf)
        assert witness is not None
        x1, x2 = witness
        assert -1.0 < x1 < x2 <= 0.0
        limit = SeqFamily.limit(PIECEWISE)
        assert seq_eval(limit, x2) - seq_eval(limit, x1) <= 1e-15

    @pytest.mark.parametrize(("grid_m", "eps"), [(2, 1e-6), (100, 0.0), (100, 1.0)])
    def test_rejects_bad_arguments(self, grid_m, eps):
        """Grid and margin are validated."""
        with pytest.raises(ParameterError):
            injectivity_witness(BUMP, 1, grid_m, eps)


class TestConvergenceTable:
    """Tabulated gaps."""

    def test_rows(self):
        """One row per index, in order."""
        rows = convergence_table(PIECEWISE, [1, 2, 3], grid_m=1001)
        assert [row["n"] for row in rows] == [1, 2, 3]
        for row in rows:
            assert row["sup_norm_gap"] == pytest.approx(1 / (6 * row["n"]), abs=1e-9)


class TestSampleSequence:
    """Curve samples of sequence members."""

    def test_sample(self):
        """Samples stay inside the open interval and record the kind."""
        s = SeqFamily(kind=BUMP, n=3)
        sample = sample_sequence(s, 101, 1e-6)
        assert len(sample.xs) == len(sample.ys) == len(sample.dys) == 101
        assert sample.xs[0] == -1.0 + 1e-6
        assert sample.xs[-1] == 1.0 - 1e-6
        assert sample.meta == {"kind": "bump"}
        assert sample.description == "bump[n=3]"
        assert all(d > 0 for d in sample.dys)

    @pytest.mark.parametrize(("grid_n", "eps"), [(1, 1e-6), (101, 0.0), (101, 1.0)])
    def test_rejects_bad_arguments(self, grid_n, eps):
        """The closed endpoints are excluded."""
        with pytest.raises(ParameterError):
            sample_sequence(SeqFamily(kind=PIECEWISE, n=1), grid_n, eps)
