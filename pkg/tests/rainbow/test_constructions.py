"""Tests for the lower-bound formula, the gadget and the two extremal constructions."""

from collections import Counter
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from rainbow.constructions.gadget import AUXILIARY_COLOR, CORNERS, auxiliary_pair, lemma4_gadget
from rainbow.constructions.lower_bound import (
    lower_bound_breakdown,
    lower_bound_formula,
    lower_bound_sum,
    lower_bound_witnesses,
)
from rainbow.constructions.no_quad import (
    BULGE,
    build_no_rainbow_quad_set,
    chord_points,
    class_size,
    polygon_vertices,
    verify_no_empty_rainbow_quad,
)
from rainbow.constructions.random_sets import random_colored_set
from rainbow.constructions.upper_bound import (
    blocker_layers,
    blocking_violations,
    build_upper_bound_set,
    ceil_log2,
    triangle_multiplicity,
    upper_bound_value,
    verify_theorem1_upper,
)
from rainbow.core.enumeration import (
    empty_quadrilaterals,
    empty_quadrilaterals_naive,
    empty_rainbow_triangles,
)
from rainbow.core.errors import ConstructionError, DegenerateInputError, InvalidArgumentError
from rainbow.core.geometry import (
    ColoredPointSet,
    Point,
    is_general_position,
    point_in_triangle_strict,
    validate_witness,
)
from rainbow.core.horton import empty_triangles_horton, generate_horton
from rainbow.io.pointsets import dumps_json


class TestLowerBoundFormula:
    @pytest.mark.parametrize(
        "k, m, expected",
        [(3, 3, 1), (4, 4, 4), (4, 2, 3), (3, 1, 0), (5, 1, 0), (5, 5, 10)],
    )
    def test_known_values(self, k, m, expected):
        assert lower_bound_formula(k, m) == expected

    @settings(max_examples=200, deadline=None)
    @given(k=st.integers(min_value=3, max_value=200), m=st.integers(min_value=1, max_value=200))
    def test_closed_form_matches_sum(self, k, m):
        assert lower_bound_formula(k, m) == lower_bound_sum(k, m)

    def test_large_m_saturates(self):
        assert lower_bound_formula(6, 6) == lower_bound_formula(6, 60)

    def test_breakdown_terms(self):
        breakdown = lower_bound_breakdown(4, 2)
        assert [term.r for term in breakdown.per_color] == [1, 2, 2, 2]
        assert [term.guaranteed for term in breakdown.per_color] == [0, 0, 1, 2]
        assert breakdown.total == 3

    @pytest.mark.parametrize("k, m", [(2, 3), (3, 0)])
    def test_invalid_arguments(self, k, m):
        with pytest.raises(InvalidArgumentError):
            lower_bound_formula(k, m)


class TestLowerBoundWitnesses:
    @pytest.mark.parametrize("k, m, seed", [(3, 3, 0), (4, 2, 1), (4, 4, 2), (5, 3, 3), (6, 2, 4)])
    def test_random_sets_meet_the_bound(self, k, m, seed):
        subject = random_colored_set(k, m, seed=seed)
        witnesses = lower_bound_witnesses(subject)
        assert len(witnesses) >= lower_bound_formula(k, m)
        assert all(validate_witness(subject, w) for w in witnesses)
        assert len(empty_rainbow_triangles(subject)) >= len(witnesses)

    @pytest.mark.slow
    @pytest.mark.parametrize("seed", range(500))
    def test_bound_holds_across_seeds(self, seed):
        k, m = 3 + seed % 4, 1 + (seed // 4) % 5
        subject = random_colored_set(k, m, seed=seed)
        bound = lower_bound_formula(k, m)
        witnesses = lower_bound_witnesses(subject)
        assert all(validate_witness(subject, w) for w in witnesses)
        assert len(witnesses) >= bound
        assert len(empty_rainbow_triangles(subject)) >= bound

    @pytest.mark.parametrize("k, m", [(4, 3), (5, 2)])
    def test_clustered_horton_sets_meet_the_bound(self, k, m):
        subject, _ = build_upper_bound_set(k, m)
        witnesses = lower_bound_witnesses(subject)
        assert len(witnesses) >= lower_bound_formula(k, m)
        assert all(validate_witness(subject, w) for w in witnesses)

    def test_polygon_construction_meets_the_bound(self):
        subject = build_no_rainbow_quad_set(4)
        witnesses = lower_bound_witnesses(subject)
        assert len(witnesses) >= lower_bound_formula(4, subject.m) == 4
        assert all(validate_witness(subject, w) for w in witnesses)

    def test_unbalanced_set_is_rejected(self, triangle_with_center):
        with pytest.raises(DegenerateInputError):
            lower_bound_witnesses(triangle_with_center)

    def test_two_colors_are_rejected(self):
        with pytest.raises(DegenerateInputError):
            lower_bound_witnesses(random_colored_set(2, 3))


class TestGadget:
    def test_shape(self):
        gadget = lemma4_gadget()
        assert gadget.n == 9
        assert gadget.k == 4
        assert gadget.colors.count(AUXILIARY_COLOR) == 6
        assert is_general_position(gadget.points)

    def test_auxiliary_points_stay_inside_the_triangle(self):
        a, b, c = CORNERS["A"], CORNERS["B"], CORNERS["C"]
        for corner in CORNERS:
            for point in auxiliary_pair(corner):
                assert point_in_triangle_strict(point, a, b, c)

    def test_full_gadget_has_no_empty_rainbow_quadrilateral(self):
        split = empty_quadrilaterals(lemma4_gadget())
        assert [w for w in split.convex if w.rainbow] == []
        assert [w for w in split.nonconvex if w.rainbow] == []

    def test_naive_agrees_on_full_gadget(self):
        split = empty_quadrilaterals_naive(lemma4_gadget())
        assert not any(w.rainbow for w in split.convex + split.nonconvex)

    @pytest.mark.parametrize("drop", sorted(CORNERS))
    def test_dropping_a_pair_creates_a_rainbow_quadrilateral(self, drop):
        split = empty_quadrilaterals(lemma4_gadget(drop=drop))
        assert sum(1 for w in split.convex + split.nonconvex if w.rainbow) >= 1

    def test_bad_drop(self):
        with pytest.raises(InvalidArgumentError):
            lemma4_gadget(drop="D")


class TestRandomSets:
    def test_same_seed_same_set(self):
        assert random_colored_set(4, 5, seed=42) == random_colored_set(4, 5, seed=42)

    def test_different_seed_different_set(self):
        assert random_colored_set(4, 5, seed=1).points != random_colored_set(4, 5, seed=2).points

    def test_balanced_and_general(self):
        subject = random_colored_set(5, 4, seed=9)
        assert subject.class_sizes() == {color: 4 for color in range(1, 6)}
        assert is_general_position(subject.points)

    def test_grid_too_small(self):
        with pytest.raises(InvalidArgumentError):
            random_colored_set(10, 10, grid_size=50)

    def test_attempts_exhausted(self):
        with pytest.raises(ConstructionError):
            random_colored_set(3, 3, grid_size=9, max_attempts=5)


class TestUpperBoundHelpers:
    @pytest.mark.parametrize("k, expected", [(1, 0), (2, 1), (3, 2), (4, 2), (5, 3), (8, 3), (9, 4)])
    def test_ceil_log2(self, k, expected):
        assert ceil_log2(k) == expected

    def test_blocker_layers(self):
        assert blocker_layers(8, 100) == 5
        assert blocker_layers(8, 3) == 2

    def test_upper_bound_value(self):
        assert upper_bound_value(4, 1) == 384 * 16
        assert upper_bound_value(4, 100) == 384 * 16 * 8

    def test_multiplicity_regimes(self):
        assert triangle_multiplicity(8, 3, 1) == 27
        assert triangle_multiplicity(8, 10, 2) == 4 * 9 * 10
        assert triangle_multiplicity(8, 50, 2) == 4 * 9 * 14

    @pytest.mark.parametrize("k, m", [(2, 4), (4, 0)])
    def test_invalid_arguments(self, k, m):
        with pytest.raises(InvalidArgumentError):
            build_upper_bound_set(k, m)


class TestUpperBoundConstruction:
    def test_single_point_clusters_are_the_horton_set(self):
        subject, schedule = build_upper_bound_set(4, 1)
        assert subject.points == generate_horton(4).points
        assert schedule.blockers == ()
        rainbow = empty_rainbow_triangles(subject)
        assert len(rainbow) == len(empty_triangles_horton(generate_horton(4)))

    def test_clusters_are_colored_by_centre(self):
        subject, schedule = build_upper_bound_set(5, 3)
        assert subject.k == 5 and subject.m == 3
        assert all(subject.colors[idx] == idx // 3 + 1 for idx in range(subject.n))
        assert all(schedule.cluster_of(idx) == idx // 3 for idx in range(subject.n))

    def test_radii_shrink(self):
        _, schedule = build_upper_bound_set(6, 6)
        assert all(later < earlier for earlier, later in zip(schedule.epsilons, schedule.epsilons[1:]))

    def test_small_case_meets_both_bounds(self):
        report = verify_theorem1_upper(4, 3)
        assert report.passed
        assert report.invalid_witnesses == 0
        assert report.lower_bound <= report.count <= report.bound
        assert report.distinct_clusters

    @pytest.mark.slow
    def test_blocking_obligations_hold(self):
        subject, schedule = build_upper_bound_set(8, 8)
        assert schedule.blockers
        assert blocking_violations(subject, schedule) == []

    @pytest.mark.slow
    @pytest.mark.parametrize("k, m", [(k, m) for k in range(3, 9) for m in range(1, 9)] + [(8, 16), (6, 12)])
    def test_sandwich(self, k, m):
        report = verify_theorem1_upper(k, m)
        assert report.lower_bound <= report.count <= report.bound
        assert report.distinct_clusters


class TestNoRainbowQuadrilateral:
    def test_class_size(self):
        assert class_size(4) == 6
        assert class_size(5) == 16

    def test_polygon_is_convex(self):
        centres, anchors = polygon_vertices(5)
        assert len(centres) == len(anchors) == 4
        assert is_general_position(centres + anchors)

    @pytest.mark.parametrize("k", [4, 5, 6, 7])
    def test_two_chord_points_per_cone(self, k):
        centres, anchors = polygon_vertices(k)
        placed = chord_points(centres, anchors, BULGE)
        per_cone = Counter((centre, cone) for centre, cone, _ in placed)
        assert per_cone == {(i, cone): 2 for i in range(k - 1) for cone in range(k - 3)}
        assert len(placed) == class_size(k)

    def test_cross_cluster_triangles_hold_two_last_color_points(self):
        subject = build_no_rainbow_quad_set(4)
        m = subject.m
        clusters = [range(i * m, (i + 1) * m) for i in range(3)]
        last = [subject.points[i] for i in range(subject.n) if subject.colors[i] == 4]
        assert len(last) == class_size(4)
        for a, b, c in product(*clusters):
            corners = (subject.points[a], subject.points[b], subject.points[c])
            assert sum(1 for q in last if point_in_triangle_strict(q, *corners)) >= 2

    def test_k4_has_no_empty_rainbow_quadrilateral(self):
        subject = build_no_rainbow_quad_set(4)
        assert subject.k == 4 and subject.m == 6 and subject.n == 24
        passed, witness = verify_no_empty_rainbow_quad(subject)
        assert passed and witness is None

    def test_k4_naive_agrees(self):
        subject = build_no_rainbow_quad_set(4)
        assert not any(w.rainbow for w in empty_quadrilaterals_naive(subject).convex)

    def test_counterexample_is_reported(self, rainbow_square):
        passed, witness = verify_no_empty_rainbow_quad(rainbow_square)
        assert not passed
        assert witness.vertex_indices == (0, 1, 2, 3)

    @pytest.mark.slow
    @pytest.mark.parametrize("k", [5, 6])
    def test_larger_k(self, k):
        passed, _ = verify_no_empty_rainbow_quad(build_no_rainbow_quad_set(k))
        assert passed

    def test_invalid_k(self):
        with pytest.raises(InvalidArgumentError):
            build_no_rainbow_quad_set(3)


def test_relabeling_keeps_counts():
    subject = random_colored_set(4, 3, seed=5)
    relabeled = subject.relabeled({1: 4, 2: 3, 3: 2, 4: 1})
    assert len(empty_rainbow_triangles(subject)) == len(empty_rainbow_triangles(relabeled))


def test_gadget_colors_by_corner():
    gadget = lemma4_gadget()
    assert gadget.colors[:3] == (1, 2, 3)
    assert isinstance(gadget, ColoredPointSet)
    assert gadget.points[0] == Point(0, 0)


@pytest.mark.parametrize(
    "build",
    [
        lambda: build_upper_bound_set(4, 3)[0],
        lambda: build_no_rainbow_quad_set(4),
        lemma4_gadget,
        lambda: lemma4_gadget(drop="C"),
        lambda: random_colored_set(4, 5, seed=11),
    ],
    ids=["upper", "noquad", "gadget", "gadget-drop", "random"],
)
def test_constructions_regenerate_identically(build):
    assert dumps_json(build()) == dumps_json(build())
