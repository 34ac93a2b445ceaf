"""Exact geometric primitives on rational points.

Every coordinate is a :class:`fractions.Fraction`; no predicate in this module
rounds. Hot loops elsewhere work on the integer image of a point set returned
by :func:`integer_coordinates`, which preserves every orientation sign.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from rainbow.core.errors import DegenerateInputError

Scalar = Fraction
Number = Union[int, Fraction]
IntPoint = Tuple[int, int]


@dataclass(frozen=True, order=True)
class Point:
    """A point with exact rational coordinates."""

    x: Fraction
    y: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def scaled(self, factor: Number) -> "Point":
        return Point(self.x * factor, self.y * factor)


def cross(a: Tuple[Number, Number], b: Tuple[Number, Number], c: Tuple[Number, Number]) -> Number:
    """Return the determinant (b - a) x (c - a) for coordinate pairs."""

    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _sign(value: Number) -> int:
    return (value > 0) - (value < 0)


def orient(a: Point, b: Point, c: Point) -> int:
    """Sign of the turn a -> b -> c: +1 counterclockwise, 0 collinear, -1 clockwise."""

    return _sign((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x))


def point_in_triangle_strict(p: Point, a: Point, b: Point, c: Point) -> bool:
    """Return True iff ``p`` lies strictly inside triangle ``abc``.

    Raises
    ------
    DegenerateInputError
        If ``a``, ``b`` and ``c`` are collinear.
    """

    turn = orient(a, b, c)
    if turn == 0:
        raise DegenerateInputError("Triangle vertices are collinear.")
    return orient(a, b, p) == turn and orient(b, c, p) == turn and orient(c, a, p) == turn


def in_triangle_xy(p: IntPoint, a: IntPoint, b: IntPoint, c: IntPoint) -> bool:
    """Strict containment on coordinate pairs of a non-degenerate triangle."""

    turn = _sign(cross(a, b, c))
    return (
        _sign(cross(a, b, p)) == turn
        and _sign(cross(b, c, p)) == turn
        and _sign(cross(c, a, p)) == turn
    )


def _ccw_around(pivot: Tuple[Number, Number]):
    def compare(u, v) -> int:
        return -_sign(cross(pivot, u, v))

    return cmp_to_key(compare)


def convex_order(points: Sequence[Tuple[Number, Number]]) -> Optional[List[int]]:
    """Return the counterclockwise order of four points in convex position.

    The order starts at the lexicographically smallest point. ``None`` is
    returned when one point lies inside the triangle of the other three.
    Callers guarantee that no three points are collinear.
    """

    for inner in range(4):
        others = [points[i] for i in range(4) if i != inner]
        if in_triangle_xy(points[inner], *others):
            return None
    start = min(range(4), key=lambda i: (points[i][0], points[i][1]))
    rest = sorted((i for i in range(4) if i != start), key=lambda i: _ccw_around(points[start])(points[i]))
    return [start, *rest]


def is_convex_quadrilateral(a: Point, b: Point, c: Point, d: Point) -> Optional[Tuple[Point, Point, Point, Point]]:
    """Return the convex cyclic ordering of four points, or ``None``.

    Raises
    ------
    DegenerateInputError
        If two points coincide or three of them are collinear.
    """

    quad = (a, b, c, d)
    if len(set(quad)) != 4:
        raise DegenerateInputError("Quadrilateral vertices must be distinct.")
    for u, v, w in combinations(quad, 3):
        if orient(u, v, w) == 0:
            raise DegenerateInputError("Three quadrilateral vertices are collinear.")
    order = convex_order([(p.x, p.y) for p in quad])
    if order is None:
        return None
    return tuple(quad[i] for i in order)  # type: ignore[return-value]


def integer_coordinates(points: Sequence[Point]) -> List[IntPoint]:
    """Scale all points by the lcm of their denominators and return integer pairs."""

    scale = 1
    for point in points:
        scale = math.lcm(scale, point.x.denominator, point.y.denominator)
    return [(int(p.x * scale), int(p.y * scale)) for p in points]


def has_distinct_x(points: Sequence[Point]) -> bool:
    return len({p.x for p in points}) == len(points)


def _points_of(subject: Union["ColoredPointSet", Sequence[Point]]) -> Sequence[Point]:
    return subject.points if isinstance(subject, ColoredPointSet) else subject


def is_general_position(subject: Union["ColoredPointSet", Sequence[Point]]) -> bool:
    """True iff no three points are collinear and all x-coordinates differ."""

    points = _points_of(subject)
    if not has_distinct_x(points):
        return False
    coords = integer_coordinates(points)
    for a, b, c in combinations(coords, 3):
        if cross(a, b, c) == 0:
            return False
    return True


@dataclass(frozen=True)
class ColoredPointSet:
    """Points with one color per point; colors are ``1..k``.

    ``m`` is the common class size, or ``None`` for a set whose classes are
    not all the same size.
    """

    points: Tuple[Point, ...]
    colors: Tuple[int, ...]
    k: int
    m: Optional[int]
    _int_coords: Tuple[IntPoint, ...] = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if len(self.points) != len(self.colors):
            raise DegenerateInputError("Every point needs exactly one color.")
        if self.k < 1 or set(self.colors) != set(range(1, self.k + 1)):
            raise DegenerateInputError(f"Colors must be exactly 1..{self.k}.")
        if self.m is not None:
            sizes = self.class_sizes()
            if any(size != self.m for size in sizes.values()):
                raise DegenerateInputError(f"Every color class must have {self.m} points, found {sizes}.")
        object.__setattr__(self, "_int_coords", tuple(integer_coordinates(self.points)))

    @classmethod
    def from_points(cls, points: Iterable[Point], colors: Iterable[int]) -> "ColoredPointSet":
        """Build a set inferring ``k`` and ``m`` from the coloring."""

        points = tuple(points)
        colors = tuple(colors)
        if not colors:
            raise DegenerateInputError("A colored point set needs at least one point.")
        k = max(colors)
        sizes = {c: colors.count(c) for c in set(colors)}
        m = sizes[colors[0]] if len(set(sizes.values())) == 1 else None
        return cls(points, colors, k, m)

    @classmethod
    def uncolored(cls, points: Iterable[Point]) -> "ColoredPointSet":
        points = tuple(points)
        return cls(points, (1,) * len(points), 1, len(points))

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def int_coords(self) -> Tuple[IntPoint, ...]:
        return self._int_coords

    def class_sizes(self) -> Dict[int, int]:
        sizes: Dict[int, int] = {}
        for color in self.colors:
            sizes[color] = sizes.get(color, 0) + 1
        return sizes

    def without(self, indices: Iterable[int]) -> "ColoredPointSet":
        """Return the set with the given point indices removed."""

        dropped = set(indices)
        keep = [i for i in range(self.n) if i not in dropped]
        return ColoredPointSet.from_points((self.points[i] for i in keep), (self.colors[i] for i in keep))

    def relabeled(self, mapping: Dict[int, int]) -> "ColoredPointSet":
        return ColoredPointSet(self.points, tuple(mapping[c] for c in self.colors), self.k, self.m)

    def require_general_position(self) -> None:
        if not is_general_position(self.points):
            raise DegenerateInputError("Point set has a collinear triple or a repeated x-coordinate.")


@dataclass(frozen=True, order=True)
class PolygonWitness:
    """An empty polygon spanned by points of a :class:`ColoredPointSet`.

    Triangles list their vertex indices in increasing order; quadrilaterals
    list the boundary cycle counterclockwise from the smallest index.
    """

    vertex_indices: Tuple[int, ...]
    convex: bool = True
    empty: bool = True
    rainbow: bool = False

    @property
    def shape(self) -> str:
        return "triangle" if len(self.vertex_indices) == 3 else "quad"

    @property
    def vertex_set(self) -> Tuple[int, ...]:
        return tuple(sorted(self.vertex_indices))


def canonical_cycle(order: Sequence[int], coords: Sequence[IntPoint]) -> Tuple[int, ...]:
    """Rotate/reflect a polygon cycle to counterclockwise order from its smallest index."""

    cycle = list(order)
    area = sum(
        coords[cycle[i]][0] * coords[cycle[(i + 1) % len(cycle)]][1]
        - coords[cycle[(i + 1) % len(cycle)]][0] * coords[cycle[i]][1]
        for i in range(len(cycle))
    )
    if area < 0:
        cycle.reverse()
    start = cycle.index(min(cycle))
    return tuple(cycle[start:] + cycle[:start])


def is_rainbow(colors: Sequence[int], indices: Iterable[int]) -> bool:
    used = [colors[i] for i in indices]
    return len(set(used)) == len(used)


def is_monochromatic(colors: Sequence[int], indices: Iterable[int]) -> bool:
    return len({colors[i] for i in indices}) == 1


def triangle_is_empty(coords: Sequence[IntPoint], i: int, j: int, l: int) -> bool:
    a, b, c = coords[i], coords[j], coords[l]
    return not any(
        in_triangle_xy(p, a, b, c) for idx, p in enumerate(coords) if idx not in (i, j, l)
    )


def _quad_triangles(coords: Sequence[IntPoint], cycle: Sequence[int]) -> Optional[Tuple[Tuple[int, int, int], Tuple[int, int, int]]]:
    """Split a simple quadrilateral along its interior diagonal."""

    v0, v1, v2, v3 = cycle
    for a, b, c, d in ((v0, v1, v2, v3), (v1, v2, v3, v0)):
        side_b = _sign(cross(coords[a], coords[c], coords[b]))
        side_d = _sign(cross(coords[a], coords[c], coords[d]))
        if side_b * side_d < 0:
            return (a, b, c), (a, c, d)
    return None


def validate_witness(subject: ColoredPointSet, witness: PolygonWitness) -> bool:
    """Recompute the convex, empty and rainbow flags of ``witness`` against ``subject``."""

    indices = witness.vertex_indices
    if len(set(indices)) != len(indices) or len(indices) not in (3, 4):
        return False
    if any(i < 0 or i >= subject.n for i in indices):
        return False
    coords = subject.int_coords
    if is_rainbow(subject.colors, indices) != witness.rainbow:
        return False
    if len(indices) == 3:
        if cross(*(coords[i] for i in indices)) == 0:
            return False
        return witness.convex and triangle_is_empty(coords, *indices) == witness.empty
    order = convex_order([coords[i] for i in indices])
    convex = order is not None and canonical_cycle([indices[i] for i in order], coords) == canonical_cycle(indices, coords)
    if convex != witness.convex:
        return False
    halves = _quad_triangles(coords, indices)
    if halves is None:
        return False
    empty = all(triangle_is_empty(coords, *tri) for tri in halves)
    return empty == witness.empty
