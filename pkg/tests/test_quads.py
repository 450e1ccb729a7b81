"""Tests for quadrilateral construction and the built-in counterexample."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semichord import (
    DomainError,
    PlacementError,
    closing_side,
    counterexample_report,
    diagonal,
    diameter_cubic,
    enumerate_incongruent_quads,
    evaluate_general,
    rhs_quadrilateral,
    side_lengths,
    solve_diameter,
)

SQRT2 = math.sqrt(2.0)
SQRT5 = math.sqrt(5.0)


def _cubic_root_oracle(a, b, c):
    """Brute-force bisection on d^3 - (a^2+b^2+c^2) d - 2abc, independent
    of the implementation under test."""
    s = a * a + b * b + c * c
    p = 2.0 * a * b * c
    lo, hi = max(a, b, c), a + b + c
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        if mid * mid * mid - s * mid - p <= 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


positive_sides = st.floats(min_value=1e-2, max_value=1e2)


class TestDiameterCubic:
    def test_unit_sides(self):
        # d^3 - 3d - 2 factors as (d - 2)(d + 1)^2.
        assert diameter_cubic(1.0, 1.0, 1.0) == pytest.approx(2.0, abs=1e-13)

    def test_counterexample_sides(self):
        root = diameter_cubic(SQRT2, 3.0 + SQRT5, 3.0 - SQRT5)
        assert root == pytest.approx(4.0 * SQRT2, rel=1e-12)
        # Substitution check: 128*sqrt(2) - 120*sqrt(2) - 8*sqrt(2) = 0.
        s = 2.0 + (3.0 + SQRT5) ** 2 + (3.0 - SQRT5) ** 2
        p = 2.0 * SQRT2 * (3.0 + SQRT5) * (3.0 - SQRT5)
        assert abs(root**3 - s * root - p) <= 1e-11

    def test_3_4_5_against_oracle(self):
        oracle = _cubic_root_oracle(3.0, 4.0, 5.0)
        assert oracle == pytest.approx(8.055810359525175, rel=1e-14)
        assert diameter_cubic(3.0, 4.0, 5.0) == pytest.approx(oracle, rel=1e-13)

    def test_1_2_3_against_oracle(self):
        oracle = _cubic_root_oracle(1.0, 2.0, 3.0)
        assert oracle == pytest.approx(4.113090584324951, rel=1e-14)
        assert diameter_cubic(1.0, 2.0, 3.0) == pytest.approx(oracle, rel=1e-13)

    @pytest.mark.parametrize("triple", [(0.0, 1.0, 1.0), (1.0, -2.0, 1.0)])
    def test_rejects_non_positive(self, triple):
        with pytest.raises(DomainError):
            diameter_cubic(*triple)

    @given(a=positive_sides, b=positive_sides, c=positive_sides)
    @settings(max_examples=200, deadline=None)
    def test_matches_oracle_everywhere(self, a, b, c):
        root = diameter_cubic(a, b, c)
        assert abs(root - _cubic_root_oracle(a, b, c)) <= 1e-12 * root


class TestClosingSide:
    def test_counterexample_fourth_side(self):
        got = closing_side(SQRT2, 3.0 + SQRT5, 4.0 * SQRT2)
        assert got == pytest.approx(3.0 - SQRT5, abs=1e-10 * 4.0 * SQRT2)

    def test_half_regular_hexagon(self):
        assert closing_side(1.0, 1.0, 2.0) == pytest.approx(1.0, abs=1e-12)

    def test_chords_exhausting_the_semicircle(self):
        # Arcs of 3 and 4 on diameter 5 meet exactly at the far endpoint.
        assert closing_side(3.0, 4.0, 5.0) == pytest.approx(0.0, abs=1e-12)

    def test_placement_error_when_chords_overshoot(self):
        with pytest.raises(PlacementError):
            closing_side(4.9, 4.9, 5.0)

    @pytest.mark.parametrize(
        "a,b,d", [(5.0, 1.0, 5.0), (1.0, 5.0, 5.0), (0.0, 1.0, 5.0), (1.0, 1.0, 0.0)]
    )
    def test_domain_errors(self, a, b, d):
        with pytest.raises(DomainError):
            closing_side(a, b, d)

    @given(a=positive_sides, b=positive_sides, c=positive_sides)
    @settings(max_examples=200, deadline=None)
    def test_reconstructs_the_third_side(self, a, b, c):
        # Any positive triple inscribes on its cubic-root diameter, so
        # walking a then b must land the fourth side on c; the error
        # budget scales with the figure size d.
        d = diameter_cubic(a, b, c)
        assert abs(closing_side(a, b, d) - c) <= 1e-10 * d

    @given(
        a=st.floats(min_value=0.1, max_value=10.0),
        b=st.floats(min_value=0.1, max_value=10.0),
        c=st.floats(min_value=0.1, max_value=10.0),
    )
    @settings(max_examples=100, deadline=None)
    def test_self_consistency_relation(self, a, b, c):
        # The rebuilt value divides by 2ab, so extreme side ratios
        # amplify the d^2 rounding beyond any fixed multiple of d;
        # moderate ranges keep the check meaningful.
        d = diameter_cubic(a, b, c)
        cd = closing_side(a, b, d)
        rebuilt = -d * (a * a + b * b + cd * cd - d * d) / (2.0 * a * b)
        assert abs(cd - rebuilt) <= 1e-10 * d


class TestEnumerateIncongruentQuads:
    def test_three_distinct_sides(self):
        arrangements = enumerate_incongruent_quads(1.0, 2.0, 3.0)
        assert len(arrangements) == 3
        assert sorted(arr.middle_side for arr in arrangements) == [1.0, 2.0, 3.0]
        shared = {arr.d for arr in arrangements}
        assert len(shared) == 1
        assert arrangements[0].d == pytest.approx(4.113090584324951, rel=1e-12)

    def test_all_equal_sides(self):
        arrangements = enumerate_incongruent_quads(1.0, 1.0, 1.0)
        assert len(arrangements) == 1
        assert arrangements[0].d == pytest.approx(2.0, abs=1e-13)

    def test_two_equal_sides(self):
        arrangements = enumerate_incongruent_quads(1.0, 1.0, 2.0)
        assert len(arrangements) == 2
        assert sorted(arr.middle_side for arr in arrangements) == [1.0, 2.0]

    def test_side_multiset_preserved(self):
        for arr in enumerate_incongruent_quads(0.5, 2.0, 1.0):
            assert sorted(arr.ordered_sides) == [0.5, 1.0, 2.0]

    def test_identity_holds_on_every_arrangement(self):
        for arr in enumerate_incongruent_quads(1.0, 2.0, 3.0):
            assert evaluate_general(arr.polygon).residual_rel <= 1e-10

    def test_arrangements_are_incongruent(self):
        arrangements = enumerate_incongruent_quads(1.0, 2.0, 3.0)
        d = arrangements[0].d
        pairs = [
            tuple(sorted((diagonal(a.polygon, 0, 2), diagonal(a.polygon, 1, 3))))
            for a in arrangements
        ]
        for i in range(len(pairs)):
            for j in range(i + 1, len(pairs)):
                gap = max(
                    abs(pairs[i][0] - pairs[j][0]), abs(pairs[i][1] - pairs[j][1])
                )
                assert gap > 1e-6 * d

    def test_rejects_non_positive(self):
        with pytest.raises(DomainError):
            enumerate_incongruent_quads(1.0, 0.0, 2.0)

    @given(a=positive_sides, b=positive_sides, c=positive_sides)
    @settings(max_examples=100, deadline=None)
    def test_shared_diameter_and_valid_polygons(self, a, b, c):
        arrangements = enumerate_incongruent_quads(a, b, c)
        assert 1 <= len(arrangements) <= 3
        reference = arrangements[0].d
        for arr in arrangements:
            assert arr.d == reference
            assert arr.polygon.n == 4
            measured = side_lengths(arr.polygon)
            for want, got in zip(arr.ordered_sides, measured):
                assert abs(want - got) <= 1e-10 * reference


class TestCounterexampleReport:
    def test_relation_holds(self):
        report = counterexample_report()
        assert report.relation_holds is True
        assert report.relation_residual <= 1e-12 * 32.0

    def test_off_circle_distance(self):
        # Coordinate oracle: the corner vertex sits at (0, sqrt(2)),
        # the semicircle center at (2*sqrt(2), 0) with radius 2*sqrt(2).
        expected = math.hypot(2.0 * SQRT2, SQRT2) - 2.0 * SQRT2
        report = counterexample_report()
        assert report.off_circle_distance == pytest.approx(expected, rel=1e-12)
        assert 0.33 <= report.off_circle_distance <= 0.34

    def test_inscribable_variant(self):
        report = counterexample_report()
        assert report.inscribable_variant_d == pytest.approx(4.0 * SQRT2, rel=1e-12)

    def test_relation_residual_matches_direct_evaluation(self):
        report = counterexample_report()
        d = 4.0 * SQRT2
        direct = abs(
            d * d - rhs_quadrilateral(SQRT2, 3.0 + SQRT5, 3.0 - SQRT5, d)
        )
        assert report.relation_residual == direct


@given(a=positive_sides, b=positive_sides, c=positive_sides)
@settings(max_examples=150, deadline=None)
def test_cubic_and_transcendental_routes_agree(a, b, c):
    algebraic = diameter_cubic(a, b, c)
    transcendental = solve_diameter([a, b, c]).d
    assert abs(algebraic - transcendental) <= 1e-10 * algebraic
