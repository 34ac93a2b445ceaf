"""Tests for Horton set generation, addressing, visible edges and the triangle recursion."""

import pytest

from rainbow.core.enumeration import empty_triangles, has_r_hole
from rainbow.core.errors import AddressError, BudgetExceededError, DegenerateInputError, InvalidArgumentError, NotHortonError
from rainbow.core.geometry import ColoredPointSet, Point, is_general_position
from rainbow.core.horton import (
    ABOVE,
    BELOW,
    HortonSet,
    address_indices,
    empty_triangles_horton,
    generate_horton,
    horton_check_estimate,
    is_horton,
    layer_bound,
    layer_histogram,
    subset_by_address,
    triangle_layer,
    visible_edges,
    visible_edges_by_definition,
)


class TestGeneration:
    @pytest.mark.parametrize("n", list(range(1, 33)) + [48, 64])
    def test_generated_sets_are_horton(self, n):
        horton = generate_horton(n)
        assert horton.n == n
        assert is_horton(horton.points)

    def test_x_coordinates_are_indices(self):
        horton = generate_horton(20)
        assert [p.x for p in horton.points] == list(range(20))

    def test_generated_set_is_in_general_position(self):
        assert is_general_position(generate_horton(32).points)

    def test_rejects_empty_size(self):
        with pytest.raises(InvalidArgumentError):
            generate_horton(0)


class TestHortonCheck:
    def test_small_counterexample(self):
        points = [Point(0, 0), Point(1, 1), Point(2, 10), Point(3, 3)]
        assert not is_horton(points)
        with pytest.raises(NotHortonError):
            HortonSet.from_points(points)

    def test_order_of_input_is_irrelevant(self):
        points = list(reversed(generate_horton(8).points))
        assert is_horton(points)
        assert HortonSet.from_points(points).points == generate_horton(8).points

    def test_repeated_x_raises(self):
        with pytest.raises(DegenerateInputError):
            is_horton([Point(0, 0), Point(0, 1), Point(1, 5)])

    def test_budget_is_checked_first(self):
        with pytest.raises(BudgetExceededError) as excinfo:
            is_horton(generate_horton(32).points, budget=100)
        assert excinfo.value.estimate == horton_check_estimate(32) == 32**3 // 6

    def test_budget_large_enough(self):
        assert is_horton(generate_horton(16).points, budget=horton_check_estimate(16))


class TestAddresses:
    def test_single_bit(self):
        assert address_indices(8, "0") == [0, 2, 4, 6]
        assert address_indices(8, "1") == [1, 3, 5, 7]

    def test_two_bits(self):
        assert address_indices(8, "01") == [2, 6]

    def test_empty_address_is_everything(self):
        assert address_indices(5, "") == [0, 1, 2, 3, 4]

    def test_too_deep(self):
        with pytest.raises(AddressError):
            address_indices(8, "0001")

    def test_not_binary(self):
        with pytest.raises(InvalidArgumentError):
            address_indices(8, "2")

    def test_subset_is_horton(self):
        subset = subset_by_address(generate_horton(16), "10")
        assert subset.n == 4
        assert is_horton(subset.points)


class TestVisibleEdges:
    @pytest.mark.parametrize("n", [2, 3, 5, 8, 13, 16, 21, 32])
    def test_scan_matches_definition(self, n):
        horton = generate_horton(n)
        assert visible_edges(horton) == sorted(visible_edges_by_definition(horton))

    @pytest.mark.parametrize("n", [4, 16, 64])
    def test_fewer_than_2n(self, n):
        assert len(visible_edges(generate_horton(n))) < 2 * n

    def test_sides_follow_parity(self):
        for edge in visible_edges(generate_horton(16)):
            assert (edge.i - edge.j) % 2 == 0
            assert edge.side == (ABOVE if edge.i % 2 == 0 else BELOW)

    def test_consecutive_same_parity_pairs_are_visible(self):
        pairs = {(e.i, e.j) for e in visible_edges(generate_horton(10))}
        assert all((i, i + 2) in pairs for i in range(8))


class TestEmptyTriangles:
    @pytest.mark.parametrize("n", [3, 4, 7, 12, 16, 25, 32])
    def test_recursion_matches_sweep(self, n):
        horton = generate_horton(n)
        recursive = [w.vertex_indices for w in empty_triangles_horton(horton)]
        swept = [w.vertex_indices for w in empty_triangles(ColoredPointSet.uncolored(horton.points))]
        assert recursive == swept
        assert len(set(recursive)) == len(recursive)

    @pytest.mark.parametrize("n", [8, 32, 64])
    def test_quadratic_bound(self, n):
        assert len(empty_triangles_horton(generate_horton(n))) <= 2 * n * n

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [100, 128, 200, 256])
    def test_quadratic_bound_up_to_256(self, n):
        assert len(empty_triangles_horton(generate_horton(n))) <= 2 * n * n

    def test_layers_respect_bound(self):
        horton = generate_horton(64)
        histogram = layer_histogram(horton, empty_triangles_horton(horton))
        assert all(count <= layer_bound(64, layer) for layer, count in histogram.items())

    def test_layer_of_mixed_parity_triangle(self):
        horton = generate_horton(8)
        triangles = empty_triangles_horton(horton)
        mixed = next(w for w in triangles if len({i % 2 for i in w.vertex_indices}) == 2)
        assert triangle_layer(horton, mixed) == 1

    def test_layer_of_same_parity_triangle(self):
        horton = generate_horton(8)
        same = next(w for w in empty_triangles_horton(horton) if w.vertex_indices == (0, 2, 4))
        assert triangle_layer(horton, same) == 2

    def test_layer_bound_values(self):
        assert layer_bound(4, 1) == 128
        assert layer_bound(4, 3) == 32


@pytest.mark.slow
def test_no_seven_hole():
    horton = generate_horton(16)
    subject = ColoredPointSet.uncolored(horton.points)
    assert has_r_hole(subject, 5)
    assert not has_r_hole(subject, 7)


@pytest.mark.slow
def test_visible_edges_at_scale():
    horton = generate_horton(1024)
    edges = visible_edges(horton)
    assert len(edges) < 2 * 1024
