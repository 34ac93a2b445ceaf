"""Colored sets without an empty rainbow quadrilateral.

The ``k - 1`` cluster centres and ``k - 1`` chord anchors alternate around a
rational near-regular ``2(k - 1)``-gon inscribed in the unit circle. Points
of color ``k`` sit just inside the chord joining the two anchors that flank
a centre: two of them in each angular cone spanned at that centre by two
consecutive other centres. Every triangle with vertices in three distinct
clusters then contains two points of color ``k``, so no four colors can span
an empty convex 4-gon.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from rainbow.constructions.certificates import Pair, distance_squared_at_least, inside_all_triangles
from rainbow.core.enumeration import empty_rainbow_quadrilaterals
from rainbow.core.errors import ConstructionError, InvalidArgumentError
from rainbow.core.geometry import ColoredPointSet, Point, PolygonWitness, cross, is_general_position

LOGGER = logging.getLogger(__name__)

ANGLE_OFFSET = 0.3
MAX_DENOMINATOR = 10**6
BULGE = Fraction(1, 200)
MAX_HALVINGS = 40
MAX_PLACEMENT_ATTEMPTS = 6


def class_size(k: int) -> int:
    """Points per color, ``2k^2 - 8k + 6``."""

    return 2 * k * k - 8 * k + 6


def _circle_point(angle: float) -> Point:
    # Rational point on the unit circle from a rational tangent half-angle.
    t = Fraction(math.tan(angle / 2)).limit_denominator(MAX_DENOMINATOR)
    return Point((1 - t * t) / (1 + t * t), 2 * t / (1 + t * t))


def polygon_vertices(k: int) -> Tuple[List[Point], List[Point]]:
    """Centres ``v_i`` and anchors ``w_i``; ``w_i`` lies between ``v_i`` and ``v_{i+1}``."""

    sides = k - 1
    ring = [_circle_point(math.pi * j / sides + ANGLE_OFFSET) for j in range(2 * sides)]
    size = len(ring)
    for j in range(size):
        a, b, c = ring[j], ring[(j + 1) % size], ring[(j + 2) % size]
        if cross((a.x, a.y), (b.x, b.y), (c.x, c.y)) <= 0:
            raise ConstructionError(f"Rational polygon for k={k} lost convex position at vertex {j}.")
    return ring[0::2], ring[1::2]


def _pair(p: Point) -> Pair:
    return (p.x, p.y)


def _chord_parameter(apex: Point, target: Point, start: Point, end: Point) -> Fraction:
    """Parameter along ``start -> end`` where the line ``apex target`` crosses it."""

    before = cross(_pair(apex), _pair(target), _pair(start))
    after = cross(_pair(apex), _pair(target), _pair(end))
    return before / (before - after)


def chord_points(centres: Sequence[Point], anchors: Sequence[Point], bulge: Fraction) -> List[Tuple[int, int, Point]]:
    """Color-``k`` points as ``(centre index, cone index, point)``.

    Cone ``a`` at centre ``i`` is bounded by the rays towards ``v_{i+a+1}`` and
    ``v_{i+a+2}``.
    """

    sides = len(centres)
    placed = []
    for i, apex in enumerate(centres):
        start, end = anchors[i - 1], anchors[i]
        middle = Point((start.x + end.x) / 2, (start.y + end.y) / 2)
        inward = apex - middle
        for cone in range(sides - 2):
            near = centres[(i + cone + 1) % sides]
            far = centres[(i + cone + 2) % sides]
            s_near = _chord_parameter(apex, near, start, end)
            s_far = _chord_parameter(apex, far, start, end)
            for fraction in (Fraction(1, 3), Fraction(2, 3)):
                s = s_near + (s_far - s_near) * fraction
                on_chord = start + (end - start).scaled(s)
                placed.append((i, cone, on_chord + inward.scaled(bulge * s * (1 - s))))
    return placed


def _cluster_offsets(m: int, radius: Fraction, attempt: int) -> List[Point]:
    tilt = Fraction((-1) ** attempt * attempt, 7)
    offsets = []
    for j in range(m):
        s = Fraction(-1) + Fraction(2 * j, m - 1)
        offsets.append(Point(s, (s * s - Fraction(1, 2) + tilt * s) / (1 + abs(tilt))).scaled(radius * Fraction(9, 10)))
    return offsets


def _cones_certified(centres: Sequence[Point], extra: Sequence[Tuple[int, int, Point]], radius: Fraction) -> bool:
    """Two color-``k`` points per cone, strictly inside and far enough from both rays."""

    sides = len(centres)
    bound_sq = 2 * radius * radius
    for i, cone, q in extra:
        apex = _pair(centres[i])
        near = _pair(centres[(i + cone + 1) % sides])
        far = _pair(centres[(i + cone + 2) % sides])
        corners = [(centres[(i + step) % sides], Fraction(0)) for step in (0, cone + 1, cone + 2)]
        if not inside_all_triangles(q, corners):
            return False
        if not (distance_squared_at_least(_pair(q), apex, near, bound_sq) and distance_squared_at_least(_pair(q), apex, far, bound_sq)):
            return False
    return True


def _triples_blocked(centres: Sequence[Point], extra: Sequence[Tuple[int, int, Point]], radius: Fraction) -> bool:
    """Every triangle across three clusters contains two color-``k`` points."""

    for triple in combinations(range(len(centres)), 3):
        squares = [(centres[i], radius) for i in triple]
        if sum(1 for _, _, q in extra if inside_all_triangles(q, squares)) < 2:
            return False
    return True


def _initial_radius(points: Sequence[Point]) -> Fraction:
    xs = sorted(p.x for p in points)
    gap = min(b - a for a, b in zip(xs, xs[1:]))
    return min(Fraction(1, 64), gap / 4)


def build_no_rainbow_quad_set(k: int) -> ColoredPointSet:
    """Build the ``k``-colored set with ``2k^2 - 8k + 6`` points per color."""

    if k < 4:
        raise InvalidArgumentError(f"k must be at least 4, got {k}.")
    m = class_size(k)
    centres, anchors = polygon_vertices(k)

    for attempt in range(MAX_PLACEMENT_ATTEMPTS):
        bulge = BULGE * (1 + Fraction(attempt, 10))
        extra = chord_points(centres, anchors, bulge)
        radius = _initial_radius(list(centres) + [q for _, _, q in extra])
        for _ in range(MAX_HALVINGS):
            if _cones_certified(centres, extra, radius) and _triples_blocked(centres, extra, radius):
                break
            radius /= 2
        else:
            raise ConstructionError(f"No cluster radius certifies the construction for k={k}.")

        points: List[Point] = []
        colors: List[int] = []
        for i, centre in enumerate(centres):
            for offset in _cluster_offsets(m, radius, attempt):
                points.append(centre + offset)
                colors.append(i + 1)
        for _, _, q in extra:
            points.append(q)
            colors.append(k)
        if is_general_position(points):
            LOGGER.info("Built rainbow-quadrilateral-free set k=%d (m=%d, n=%d, radius=%s)", k, m, len(points), radius)
            return ColoredPointSet(tuple(points), tuple(colors), k, m)
        LOGGER.debug("Placement attempt %d is degenerate, retrying", attempt)
    raise ConstructionError(f"No general-position placement found for k={k}.")


def verify_no_empty_rainbow_quad(
    subject: ColoredPointSet,
    threads: int = 1,
    budget: Optional[int] = None,
) -> Tuple[bool, Optional[PolygonWitness]]:
    """Return ``(True, None)`` if no empty convex rainbow 4-gon exists, else the first one found."""

    quads = empty_rainbow_quadrilaterals(subject, threads=threads, budget=budget)
    if quads:
        return False, quads[0]
    return True, None
