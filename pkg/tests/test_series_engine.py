"""Tests for truncated Maclaurin expansions."""

import dataclasses
import math
from fractions import Fraction

import numpy as np
import pytest

from src.realauto.errors import DomainError, ParameterError
from src.realauto.family import evaluate
from src.realauto.models import (
    ArctanFam,
    Compose,
    Cubic,
    ErfFam,
    Identity,
    Iterate,
    MapKind,
    Negate,
    SinHalfPi,
    TanFam,
)
from src.realauto.series import (
    base_coefficients,
    default_order,
    eval_series,
    radius,
    taylor,
    termwise_scaling_holds,
)
from src.realauto.solver import solve_b_arctan, solve_b_tan

HALF_PI = math.pi / 2


@pytest.fixture(scope="module")
def solved_maps():
    """Solved arctan and tan members."""
    return {
        "arctan4": ArctanFam(a=4.0, b=solve_b_arctan(4.0).b_star),
        "arctan1_5": ArctanFam(a=1.5, b=solve_b_arctan(1.5).b_star),
        "tan_quarter": TanFam(a=0.25, b=solve_b_tan(0.25).b_star),
        "tan_09": TanFam(a=0.9, b=solve_b_tan(0.9).b_star),
    }


class TestCoefficients:
    """Coefficient values and exact structure."""

    def test_arctan_unit_b(self):
        """(4/pi) arctan(x): 4/pi, -(4/pi)/3, (4/pi)/5."""
        s = taylor(ArctanFam(a=4 / math.pi, b=1.0), 5)
        c = s.coeffs
        assert len(c) == 6
        assert c[1] == pytest.approx(4 / math.pi, rel=1e-15)
        assert c[3] == pytest.approx(-(4 / math.pi) / 3, rel=1e-15)
        assert c[5] == pytest.approx((4 / math.pi) / 5, rel=1e-15)
        assert c[0] == c[2] == c[4] == 0.0

    def test_sin_half_pi(self):
        """sin(pi x / 2): pi/2 and -(pi/2)^3 / 6."""
        c = taylor(SinHalfPi(), 3).coeffs
        assert c[1] == pytest.approx(HALF_PI, rel=1e-15)
        assert c[3] == pytest.approx(-(HALF_PI**3) / 6, rel=1e-15)

    def test_tan_base_is_exact(self):
        """The t' = 1 + t^2 recurrence reproduces 1, 1/3, 2/15, 17/315."""
        base = base_coefficients(MapKind.TAN, 7)
        assert base == (
            Fraction(0),
            Fraction(1),
            Fraction(0),
            Fraction(1, 3),
            Fraction(0),
            Fraction(2, 15),
            Fraction(0),
            Fraction(17, 315),
        )

    def test_tan_scaled_coefficients(self):
        """c_j = a b^(j-1) times the base coefficient."""
        a, b = 0.25, 1.2
        c = taylor(TanFam(a=a, b=b), 7).coeffs
        assert c[1] == pytest.approx(a, rel=1e-13)
        assert c[3] == pytest.approx(a * b**2 / 3, rel=1e-13)
        assert c[5] == pytest.approx(a * b**4 * 2 / 15, rel=1e-13)
        assert c[7] == pytest.approx(a * b**6 * 17 / 315, rel=1e-13)

    def test_tan_higher_terms_match_bernoulli_values(self):
        """62/2835 and 1382/155925 follow from the recurrence."""
        base = base_coefficients(MapKind.TAN, 11)
        assert base[9] == Fraction(62, 2835)
        assert base[11] == Fraction(1382, 155925)

    def test_erf_base(self):
        """erf(u) sqrt(pi)/2 = u - u^3/3 + u^5/10 - u^7/42."""
        base = base_coefficients(MapKind.ERF, 7)
        assert base[1::2] == (
            Fraction(1),
            Fraction(-1, 3),
            Fraction(1, 10),
            Fraction(-1, 42),
        )

    def test_erf_prefactor(self):
        """c_1 equals the slope at the origin."""
        k = 2.0
        c = taylor(ErfFam(k=k), 9).coeffs
        assert c[1] == pytest.approx(2 * k / (math.sqrt(math.pi) * math.erf(k)), rel=1e-12)

    @pytest.mark.parametrize(
        "node",
        [SinHalfPi(), ArctanFam(a=3.0, b=2.0), TanFam(a=0.5, b=1.0), ErfFam(k=1.0)],
    )
    def test_odd_families_have_exact_even_zeros(self, node):
        """Every even slot is an exact zero."""
        s = taylor(node, 30)
        assert all(q == 0 for q in s.base[0::2])
        assert all(c == 0.0 for c in s.coeffs[0::2])

    def test_identity_and_cubic(self):
        """Polynomial primitives are their own series."""
        assert taylor(Identity(), 3).coeffs == (0.0, 1.0, 0.0, 0.0)
        assert taylor(Cubic(), 4).coeffs == (0.0, 0.0, 0.0, 1.0, 0.0)

    def test_overflowing_coefficients_become_infinite(self):
        """b^j beyond binary64 range is reported as an infinity of the right sign."""
        s = taylor(ArctanFam(a=1e6, b=1e6), 400)
        assert math.isinf(s.coeffs[399])
        assert s.coeffs[399] < 0
        assert math.isfinite(eval_series(s, 0.5e-6))


class TestTaylorErrors:
    """Rejected inputs."""

    @pytest.mark.parametrize(
        "node",
        [
            Negate(inner=SinHalfPi()),
            Compose(outer=SinHalfPi(), inner=SinHalfPi()),
            Iterate(base=SinHalfPi(), n=2),
        ],
    )
    def test_composite_nodes_rejected(self, node):
        """Series of combinators are not provided."""
        with pytest.raises(DomainError):
            taylor(node, 5)
        with pytest.raises(DomainError):
            radius(node)

    def test_zero_order_rejected(self):
        """N = 0 is rejected."""
        with pytest.raises(ParameterError):
            taylor(SinHalfPi(), 0)

    def test_unknown_family_order(self):
        """Only primitive families have documented orders."""
        with pytest.raises(DomainError):
            default_order("compose")


class TestRadius:
    """Radii of convergence about 0."""

    def test_tan_quarter_pi(self):
        """pi / (2 * pi/4) = 2."""
        assert radius(TanFam(a=math.pi / 4, b=math.pi / 4)) == 2.0

    def test_arctan_radius_below_one(self, solved_maps):
        """Case I radius 1/b* is below 1 for a = 4."""
        e = solved_maps["arctan4"]
        assert radius(e) == pytest.approx(1 / e.b, rel=1e-15)
        assert radius(e) < 1

    @pytest.mark.parametrize("node", [SinHalfPi(), ErfFam(k=2.0), Identity(), Cubic()])
    def test_entire_families(self, node):
        """Entire functions have infinite radius."""
        assert radius(node) == math.inf
        assert not taylor(node, 5).has_finite_radius

    def test_case_two_radius_exceeds_one(self):
        """pi / (2 b*) > 1 for 100 random a in (0, 1)."""
        rng = np.random.default_rng(17)
        for a in rng.uniform(1e-6, 1 - 1e-6, 100):
            a = float(a)
            assert radius(TanFam(a=a, b=solve_b_tan(a).b_star)) > 1

    def test_to_dict_radius(self):
        """Infinite radius serializes as the string 'inf'."""
        assert taylor(SinHalfPi(), 3).to_dict()["radius"] == "inf"
        assert taylor(TanFam(a=math.pi / 4, b=math.pi / 4), 3).to_dict()["radius"] == 2.0


class TestEvalSeries:
    """Agreement with closed forms."""

    def test_value_at_origin(self, solved_maps):
        """c_0 = 0 for every family."""
        for e in solved_maps.values():
            assert eval_series(taylor(e), 0.0) == 0.0

    def test_sin_at_one_third(self):
        """sin(pi/6) = 1/2 from 41 terms."""
        assert eval_series(taylor(SinHalfPi(), 41), 1 / 3) == pytest.approx(0.5, abs=1e-14)

    def test_arctan_inside_half_radius(self, solved_maps):
        """a = 4 series at x = 0.5/b* matches the closed form."""
        e = solved_maps["arctan4"]
        x = 0.5 / e.b
        assert eval_series(taylor(e, 400), x) == pytest.approx(evaluate(e, x), abs=1e-10)

    def test_agreement_inside_radius(self, solved_maps):
        """100 random points with |x| <= min(0.8 radius, 1) per family."""
        nodes = [
            *solved_maps.values(),
            TanFam(a=math.pi / 4, b=math.pi / 4),
            SinHalfPi(),
            ErfFam(k=0.5),
            ErfFam(k=3.0),
            Identity(),
            Cubic(),
        ]
        rng = np.random.default_rng(23)
        for node in nodes:
            s = taylor(node)
            assert s.order == default_order(node.kind)
            limit = min(0.8 * s.radius, 1.0)
            for x in rng.uniform(-limit, limit, 100):
                x = float(x)
                assert abs(eval_series(s, x) - evaluate(node, x)) <= 1e-10, (
                    node.describe(),
                    x,
                )

    def test_documented_orders(self):
        """Orders per family."""
        assert default_order("arctan") == 400
        assert default_order("tan") == 140
        assert default_order("sin") == 40
        assert default_order("erf") == 80
        assert default_order(MapKind.SIN_HALF_PI, {"sin": 12}) == 12


class TestTermwiseScaling:
    """Exact scaling law c_j = base_j * b^j."""

    @pytest.mark.parametrize(
        "node",
        [
            ArctanFam(a=4.0, b=5.5),
            TanFam(a=0.25, b=1.3),
            SinHalfPi(),
            ErfFam(k=2.5),
            Identity(),
            Cubic(),
        ],
    )
    def test_scaling_holds(self, node):
        """The rational recomputation matches term by term."""
        assert termwise_scaling_holds(taylor(node, 15))

    def test_scaling_detects_tampering(self):
        """Coefficients of another family break the law."""
        s = taylor(TanFam(a=0.25, b=1.3), 9)
        tampered = dataclasses.replace(s, base=base_coefficients(MapKind.ARCTAN, 9))
        assert not termwise_scaling_holds(tampered)

    def test_solved_parameter_scaling(self, solved_maps):
        """The law also holds for solved parameters."""
        assert termwise_scaling_holds(taylor(solved_maps["tan_quarter"], 21))
