"""Horton sets: generation, validation, visible edges and empty triangles.

Points of a Horton set are indexed by increasing x-coordinate. ``H_s`` for a
binary address ``s`` is obtained by repeatedly keeping the even-indexed
(bit ``0``) or odd-indexed (bit ``1``) points, so ``H_s`` holds exactly the
indices congruent to ``value(s)`` modulo ``2**len(s)`` where bit ``j`` of
``s`` has weight ``2**j``.
"""

from __future__ import annotations

import logging
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from rainbow.core.errors import AddressError, BudgetExceededError, DegenerateInputError, InvalidArgumentError, NotHortonError
from rainbow.core.geometry import IntPoint, Point, PolygonWitness, cross, has_distinct_x, integer_coordinates

LOGGER = logging.getLogger(__name__)

ABOVE = "above"
BELOW = "below"


@dataclass(frozen=True)
class HortonSet:
    """A Horton set sorted strictly by x.

    Instances are produced by :func:`generate_horton` or
    :meth:`HortonSet.from_points`, which validates the recursive condition.
    """

    points: Tuple[Point, ...]

    @classmethod
    def from_points(cls, points: Sequence[Point]) -> "HortonSet":
        ordered = tuple(sorted(points, key=lambda p: p.x))
        if not is_horton(ordered):
            raise NotHortonError()
        return cls(ordered)

    @property
    def n(self) -> int:
        return len(self.points)


@dataclass(frozen=True, order=True)
class VisibleEdge:
    i: int
    j: int
    side: str


def generate_horton(n: int) -> HortonSet:
    """Return an ``n``-point Horton set with integer coordinates and ``x(p_i) = i``.

    The odd-indexed half is lifted by the smallest integer offset that the
    slope and range of both halves certify to put it high above the
    even-indexed half.
    """

    if n < 1:
        raise InvalidArgumentError(f"A Horton set needs at least one point, got n={n}.")
    heights = _horton_heights(n)
    return HortonSet(tuple(Point(i, y) for i, y in enumerate(heights)))


def _horton_heights(n: int) -> List[int]:
    if n == 1:
        return [0]
    lower = _horton_heights((n + 1) // 2)
    upper = _horton_heights(n // 2)
    # Consecutive points of one half are two apart in x.
    slope = max(_spread(lower), _spread(upper)) / Fraction(2)
    lift = math.floor(max(lower) - min(upper) + slope * (n - 1)) + 1
    heights = [0] * n
    heights[0::2] = lower
    heights[1::2] = [y + lift for y in upper]
    return heights


def _spread(values: Sequence[int]) -> int:
    return max(values) - min(values) if len(values) > 1 else 0


def _high_above(upper: Sequence[IntPoint], lower: Sequence[IntPoint]) -> bool:
    """True iff every line through two ``upper`` points passes above every ``lower`` point and vice versa."""

    for a, b in combinations(upper, 2):
        # a is left of b, so "p below line ab" means a clockwise turn.
        if any(cross(a, b, p) >= 0 for p in lower):
            return False
    for a, b in combinations(lower, 2):
        if any(cross(a, b, p) <= 0 for p in upper):
            return False
    return True


def _is_horton_coords(coords: Sequence[IntPoint]) -> bool:
    if len(coords) <= 1:
        return True
    even, odd = coords[0::2], coords[1::2]
    return _is_horton_coords(even) and _is_horton_coords(odd) and _high_above(odd, even)


def horton_check_estimate(n: int) -> int:
    """Orientation tests made by :func:`is_horton` on ``n`` points, about ``n^3 / 6``."""

    return n**3 // 6


def is_horton(points: Sequence[Point], budget: Optional[int] = None) -> bool:
    """Check the recursive Horton condition exactly.

    Raises
    ------
    DegenerateInputError
        If two points share an x-coordinate.
    BudgetExceededError
        If ``budget`` is given and the check would exceed it.
    """

    estimate = horton_check_estimate(len(points))
    if budget is not None and estimate > budget:
        raise BudgetExceededError(estimate, budget)
    if not has_distinct_x(points):
        raise DegenerateInputError("Horton sets need pairwise distinct x-coordinates.")
    ordered = sorted(points, key=lambda p: p.x)
    return _is_horton_coords(integer_coordinates(ordered))


def address_indices(n: int, address: str) -> List[int]:
    """Indices of ``H_s`` inside an ``n``-point Horton set."""

    if any(bit not in "01" for bit in address):
        raise InvalidArgumentError(f"Address '{address}' must be a binary string.")
    indices = list(range(n))
    for bit in address:
        indices = indices[int(bit)::2]
        if not indices:
            raise AddressError(f"Address '{address}' is too deep for n={n}.")
    return indices


def subset_by_address(horton: HortonSet, address: str) -> HortonSet:
    """Return ``H_s`` re-indexed by x."""

    return HortonSet(tuple(horton.points[i] for i in address_indices(horton.n, address)))


def _visible_from(coords: Sequence[IntPoint], members: Sequence[int], side: str) -> List[Tuple[int, int]]:
    """Scan same-parity pairs keeping, per left endpoint, the extreme slope seen so far."""

    edges = []
    sign = 1 if side == BELOW else -1
    for pos, i in enumerate(members):
        extreme = None
        for j in members[pos + 1:]:
            # For "below", every intermediate point must be above line(i, j).
            if extreme is None or sign * cross(coords[i], coords[j], coords[extreme]) > 0:
                edges.append((i, j))
            if extreme is None or sign * cross(coords[i], coords[extreme], coords[j]) < 0:
                extreme = j
    return edges


def visible_edges(horton: HortonSet) -> List[VisibleEdge]:
    """Edges visible from above (even pairs) and below (odd pairs), sorted by ``(i, j)``."""

    coords = integer_coordinates(horton.points)
    indices = range(horton.n)
    edges = [VisibleEdge(i, j, ABOVE) for i, j in _visible_from(coords, indices[0::2], ABOVE)]
    edges += [VisibleEdge(i, j, BELOW) for i, j in _visible_from(coords, indices[1::2], BELOW)]
    edges.sort()
    LOGGER.debug("Horton set of %d points has %d visible edges", horton.n, len(edges))
    return edges


def visible_edges_by_definition(horton: HortonSet) -> List[VisibleEdge]:
    """Direct cubic evaluation of the visible-edge definition."""

    coords = integer_coordinates(horton.points)
    edges = []
    for i, j in combinations(range(horton.n), 2):
        if (i - j) % 2:
            continue
        between = range(i + 2, j, 2)
        if i % 2 == 0 and all(cross(coords[i], coords[j], coords[l]) < 0 for l in between):
            edges.append(VisibleEdge(i, j, ABOVE))
        elif i % 2 == 1 and all(cross(coords[i], coords[j], coords[l]) > 0 for l in between):
            edges.append(VisibleEdge(i, j, BELOW))
    return edges


def _empty_triangles(coords: Sequence[IntPoint], members: List[int], out: List[Tuple[int, int, int]]) -> None:
    if len(members) < 3:
        return
    local = [coords[i] for i in members]
    even, odd = members[0::2], members[1::2]
    local_even = list(range(0, len(members), 2))
    local_odd = list(range(1, len(members), 2))
    for a, b in _visible_from(local, local_odd, BELOW):
        out.extend(tuple(sorted((members[a], members[b], p))) for p in even)
    for a, b in _visible_from(local, local_even, ABOVE):
        out.extend(tuple(sorted((members[a], members[b], p))) for p in odd)
    _empty_triangles(coords, even, out)
    _empty_triangles(coords, odd, out)


def empty_triangles_horton(horton: HortonSet) -> List[PolygonWitness]:
    """All empty triangles of a Horton set, computed through the parity recursion."""

    coords = integer_coordinates(horton.points)
    triples: List[Tuple[int, int, int]] = []
    _empty_triangles(coords, list(range(horton.n)), triples)
    triples.sort()
    return [PolygonWitness(t, convex=True, empty=True, rainbow=False) for t in triples]


def triangle_layer(horton: HortonSet, witness: PolygonWitness) -> int:
    """Return ``|s| + 1`` for the deepest ``H_s`` holding all three vertices."""

    i, j, l = witness.vertex_indices[:3]
    depth = 0
    while depth < horton.n.bit_length() + 1:
        bit = 1 << depth
        if (i & bit) == (j & bit) == (l & bit):
            depth += 1
            continue
        break
    return depth + 1


def layer_histogram(horton: HortonSet, triangles: Sequence[PolygonWitness]) -> Dict[int, int]:
    return dict(sorted(Counter(triangle_layer(horton, t) for t in triangles).items()))


def layer_bound(n: int, layer: int) -> Fraction:
    """Upper bound ``8 n^2 / 2^(t-1)`` on the empty triangles of one layer."""

    return Fraction(8 * n * n, 2 ** (layer - 1))
