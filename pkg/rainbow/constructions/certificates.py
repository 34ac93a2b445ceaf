"""Exact containment certificates over axis-parallel squares.

A point ``q`` lies strictly inside every triangle whose vertices range over
three squares iff, for each directed edge, ``q`` is strictly on the inner
side for every pair of square corners. The orientation of ``q`` against an
edge is affine in each endpoint separately, so its extremes sit at corners.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

from rainbow.core.geometry import Point, cross

Pair = Tuple[Fraction, Fraction]
Square = Tuple[Point, Fraction]


def square_corners(center: Point, radius: Fraction) -> List[Pair]:
    if radius == 0:
        return [(center.x, center.y)]
    return [
        (center.x + dx * radius, center.y + dy * radius)
        for dx in (-1, 1)
        for dy in (-1, 1)
    ]


def inside_all_triangles(q: Point, squares: Sequence[Square]) -> bool:
    """True iff ``q`` is strictly inside every triangle with one vertex per square."""

    centers = [(c.x, c.y) for c, _ in squares]
    turn = cross(*centers)
    if turn == 0:
        return False
    sign = 1 if turn > 0 else -1
    target = (q.x, q.y)
    corners = [square_corners(c, r) for c, r in squares]
    for first, second in ((0, 1), (1, 2), (2, 0)):
        for u in corners[first]:
            for v in corners[second]:
                if sign * cross(u, v, target) <= 0:
                    return False
    return True


def point_line_distance_lower_bound(p: Pair, a: Pair, b: Pair) -> Fraction:
    """Rational lower bound on the Euclidean distance from ``p`` to line ``ab``."""

    return Fraction(abs(cross(a, b, p))) / (abs(b[0] - a[0]) + abs(b[1] - a[1]))


def distance_squared_at_least(p: Pair, a: Pair, b: Pair, bound_sq: Fraction) -> bool:
    """Exact test of ``dist(p, line ab) ** 2 >= bound_sq``."""

    area = cross(a, b, p)
    length_sq = (b[0] - a[0]) ** 2 + (b[1] - a[1]) ** 2
    return area * area >= bound_sq * length_sq
