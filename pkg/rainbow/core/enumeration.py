"""Enumeration of empty triangles and quadrilaterals of colored point sets.

Two paths exist for every shape: a naive scan used as an oracle and an
optimized path. Triangles are found by a fan sweep around each leftmost
vertex; quadrilaterals by joining empty triangles that share an edge.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cmp_to_key
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Sequence, Set, Tuple

from tqdm import tqdm

from rainbow.core.errors import BudgetExceededError, DegenerateInputError, InvalidArgumentError
from rainbow.core.geometry import (
    ColoredPointSet,
    IntPoint,
    PolygonWitness,
    canonical_cycle,
    convex_order,
    cross,
    in_triangle_xy,
    is_general_position,
    is_monochromatic,
    is_rainbow,
    triangle_is_empty,
)
from rainbow.core.logging_utils import progress_enabled
from rainbow.models.reports import EnumerationReport, WitnessRecord

LOGGER = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**9
MAX_HOLE_SIZE = 7
COLOR_FILTERS = ("any", "rainbow", "mono")

Triple = Tuple[int, int, int]


@dataclass(frozen=True)
class QuadrilateralSplit:
    """Empty quadrilaterals separated by convexity."""

    convex: List[PolygonWitness]
    nonconvex: List[PolygonWitness]


def _check_budget(estimate: int, budget: Optional[int]) -> None:
    limit = DEFAULT_BUDGET if budget is None else budget
    if estimate > limit:
        raise BudgetExceededError(estimate, limit)


def _require_general_position(subject: ColoredPointSet) -> None:
    if not is_general_position(subject.points):
        raise DegenerateInputError("Enumeration needs distinct x-coordinates and no collinear triple.")


def _color_filter(subject: ColoredPointSet, witnesses: List[PolygonWitness], color_filter: str) -> List[PolygonWitness]:
    if color_filter not in COLOR_FILTERS:
        raise InvalidArgumentError(f"Unknown color filter '{color_filter}'.")
    if color_filter == "rainbow":
        return [w for w in witnesses if w.rainbow]
    if color_filter == "mono":
        return [w for w in witnesses if is_monochromatic(subject.colors, w.vertex_indices)]
    return witnesses


def _triangle_witness(subject: ColoredPointSet, triple: Triple) -> PolygonWitness:
    return PolygonWitness(triple, convex=True, empty=True, rainbow=is_rainbow(subject.colors, triple))


# ---------------------------------------------------------------------------
# Triangles
# ---------------------------------------------------------------------------


def empty_triangles_naive(subject: ColoredPointSet, budget: Optional[int] = None) -> List[PolygonWitness]:
    """All empty triangles by testing every other point against every triple."""

    _require_general_position(subject)
    n = subject.n
    _check_budget(comb(n, 3) * max(n - 3, 1), budget)
    coords = subject.int_coords
    return [
        _triangle_witness(subject, triple)
        for triple in combinations(range(n), 3)
        if triangle_is_empty(coords, *triple)
    ]


def _fan_triangles(coords: Sequence[IntPoint], starts: Sequence[int]) -> List[Triple]:
    """Empty triangles whose leftmost vertex is one of ``starts``."""

    found: List[Triple] = []
    for p in starts:
        origin = coords[p]
        right = [q for q in range(len(coords)) if coords[q][0] > origin[0]]
        right.sort(key=cmp_to_key(lambda u, v: -cross(origin, coords[u], coords[v])))
        for pos, a in enumerate(right):
            qa = coords[a]
            frontier = None
            for b in right[pos + 1:]:
                # Empty iff b turns counterclockwise past every point seen between a and b.
                if frontier is None or cross(qa, coords[frontier], coords[b]) > 0:
                    found.append(tuple(sorted((p, a, b))))
                    frontier = b
    return found


def _split(items: Sequence[int], parts: int) -> List[List[int]]:
    return [list(items[i::parts]) for i in range(parts) if items[i::parts]]


def empty_triangles(
    subject: ColoredPointSet,
    threads: int = 1,
    budget: Optional[int] = None,
) -> List[PolygonWitness]:
    """All empty triangles in sorted index order, optionally across worker processes."""

    _require_general_position(subject)
    n = subject.n
    _check_budget(n**3, budget)
    coords = list(subject.int_coords)
    if threads <= 1 or n < 16:
        starts = range(n)
        if progress_enabled(LOGGER):
            starts = tqdm(starts, desc="Sweeping leftmost vertices")
        triples = _fan_triangles(coords, list(starts))
    else:
        chunks = _split(list(range(n)), threads)
        with ProcessPoolExecutor(max_workers=threads) as executor:
            results = executor.map(_fan_triangles, [coords] * len(chunks), chunks)
            triples = [t for chunk in results for t in chunk]
    triples.sort()
    LOGGER.debug("Found %d empty triangles among %d points", len(triples), n)
    return [_triangle_witness(subject, t) for t in triples]


def empty_rainbow_triangles(subject: ColoredPointSet, threads: int = 1, budget: Optional[int] = None) -> List[PolygonWitness]:
    return _color_filter(subject, empty_triangles(subject, threads, budget), "rainbow")


def empty_monochromatic_triangles(
    subject: ColoredPointSet, threads: int = 1, budget: Optional[int] = None
) -> List[PolygonWitness]:
    return _color_filter(subject, empty_triangles(subject, threads, budget), "mono")


# ---------------------------------------------------------------------------
# Quadrilaterals
# ---------------------------------------------------------------------------


def _quad_witness(subject: ColoredPointSet, cycle: Tuple[int, ...], convex: bool) -> PolygonWitness:
    return PolygonWitness(cycle, convex=convex, empty=True, rainbow=is_rainbow(subject.colors, cycle))


def _apexes_by_edge(triangles: Sequence[PolygonWitness]) -> Dict[Tuple[int, int], List[int]]:
    apexes: Dict[Tuple[int, int], List[int]] = defaultdict(list)
    for witness in triangles:
        i, j, l = witness.vertex_indices
        apexes[(i, j)].append(l)
        apexes[(i, l)].append(j)
        apexes[(j, l)].append(i)
    return apexes


def empty_quadrilaterals(
    subject: ColoredPointSet,
    threads: int = 1,
    budget: Optional[int] = None,
    triangles: Optional[Sequence[PolygonWitness]] = None,
) -> QuadrilateralSplit:
    """Empty quadrilaterals from pairs of empty triangles across a shared edge.

    Two empty triangles on opposite sides of edge ``uv`` form an empty convex
    quadrilateral when their apex segment crosses ``uv`` and an empty simple
    non-convex one otherwise. Convex ones are met once per diagonal and
    deduplicated by boundary cycle.
    """

    if triangles is None:
        triangles = empty_triangles(subject, threads, budget)
    coords = subject.int_coords
    apexes = _apexes_by_edge(triangles)

    sides: Dict[Tuple[int, int], Tuple[List[int], List[int]]] = {}
    pairings = 0
    for (u, v), candidates in apexes.items():
        left = [a for a in candidates if cross(coords[u], coords[v], coords[a]) > 0]
        right = [b for b in candidates if cross(coords[u], coords[v], coords[b]) < 0]
        if left and right:
            sides[(u, v)] = (left, right)
            pairings += len(left) * len(right)
    _check_budget(pairings, budget)

    convex: Set[Tuple[int, ...]] = set()
    nonconvex: Set[Tuple[int, ...]] = set()
    for (u, v), (left, right) in sides.items():
        cu, cv = coords[u], coords[v]
        for a in left:
            for b in right:
                ca, cb = coords[a], coords[b]
                cycle = canonical_cycle((u, b, v, a), coords)
                if (cross(ca, cb, cu) > 0) != (cross(ca, cb, cv) > 0):
                    convex.add(cycle)
                else:
                    nonconvex.add(cycle)
    LOGGER.debug("Paired %d triangle couples into %d convex and %d non-convex empty quadrilaterals",
                 pairings, len(convex), len(nonconvex))
    return QuadrilateralSplit(
        convex=[_quad_witness(subject, c, True) for c in sorted(convex)],
        nonconvex=[_quad_witness(subject, c, False) for c in sorted(nonconvex)],
    )


def empty_quadrilaterals_naive(subject: ColoredPointSet, budget: Optional[int] = None) -> QuadrilateralSplit:
    """Empty quadrilaterals by examining every 4-subset."""

    _require_general_position(subject)
    n = subject.n
    _check_budget(comb(n, 4) * n, budget)
    coords = subject.int_coords
    convex: List[Tuple[int, ...]] = []
    nonconvex: List[Tuple[int, ...]] = []
    for quad in combinations(range(n), 4):
        pts = [coords[i] for i in quad]
        order = convex_order(pts)
        if order is not None:
            c0, c1, c2, c3 = (quad[i] for i in order)
            if triangle_is_empty(coords, c0, c1, c2) and triangle_is_empty(coords, c0, c2, c3):
                convex.append(canonical_cycle((c0, c1, c2, c3), coords))
            continue
        inner = next(
            quad[i] for i in range(4)
            if in_triangle_xy(pts[i], *(pts[j] for j in range(4) if j != i))
        )
        outer = [q for q in quad if q != inner]
        for z in outer:
            x, y = (q for q in outer if q != z)
            # Polygon x-inner-y-z: the outer triangle minus triangle (x, inner, y).
            if triangle_is_empty(coords, x, inner, z) and triangle_is_empty(coords, inner, y, z):
                nonconvex.append(canonical_cycle((x, inner, y, z), coords))
    return QuadrilateralSplit(
        convex=[_quad_witness(subject, c, True) for c in sorted(convex)],
        nonconvex=[_quad_witness(subject, c, False) for c in sorted(nonconvex)],
    )


def empty_rainbow_quadrilaterals(
    subject: ColoredPointSet, threads: int = 1, budget: Optional[int] = None
) -> List[PolygonWitness]:
    """Empty convex quadrilaterals whose four vertices have four colors."""

    return [w for w in empty_quadrilaterals(subject, threads, budget).convex if w.rainbow]


def empty_rainbow_quadrilaterals_nonconvex(
    subject: ColoredPointSet, threads: int = 1, budget: Optional[int] = None
) -> List[PolygonWitness]:
    return [w for w in empty_quadrilaterals(subject, threads, budget).nonconvex if w.rainbow]


# ---------------------------------------------------------------------------
# r-holes
# ---------------------------------------------------------------------------


def _hull_size(points: Sequence[IntPoint]) -> int:
    ordered = sorted(points)
    lower: List[IntPoint] = []
    upper: List[IntPoint] = []
    for p in ordered:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(ordered):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return len(lower) + len(upper) - 2


def _convex_polygon_empty(coords: Sequence[IntPoint], subset: Sequence[int]) -> bool:
    """Emptiness of a convex polygon through a fan from its lowest vertex."""

    pts = [coords[i] for i in subset]
    anchor = min(pts)
    rest = sorted((p for p in pts if p != anchor), key=cmp_to_key(lambda u, v: -cross(anchor, u, v)))
    chosen = set(subset)
    others = [coords[i] for i in range(len(coords)) if i not in chosen]
    for b, c in zip(rest, rest[1:]):
        if any(in_triangle_xy(p, anchor, b, c) for p in others):
            return False
    # Points on interior fan diagonals are excluded by general position.
    return True


def has_r_hole(subject: ColoredPointSet, r: int, budget: Optional[int] = None) -> bool:
    """Whether some ``r`` points form an empty convex polygon, by exhaustive scan."""

    if not 3 <= r <= MAX_HOLE_SIZE:
        raise InvalidArgumentError(f"r must lie in 3..{MAX_HOLE_SIZE}, got {r}.")
    _require_general_position(subject)
    _check_budget(comb(subject.n, r) * subject.n, budget)
    coords = subject.int_coords
    for subset in combinations(range(subject.n), r):
        if _hull_size([coords[i] for i in subset]) != r:
            continue
        if _convex_polygon_empty(coords, subset):
            return True
    return False


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


def count_report(
    subject: ColoredPointSet,
    shape: str = "triangle",
    color_filter: str = "any",
    threads: int = 1,
    budget: Optional[int] = None,
    with_witnesses: bool = False,
) -> EnumerationReport:
    """Enumerate and summarise; witnesses follow ``shape`` and ``color_filter``."""

    if shape not in ("triangle", "quad"):
        raise InvalidArgumentError(f"Unknown shape '{shape}'.")
    triangles = empty_triangles(subject, threads, budget)
    rainbow = _color_filter(subject, triangles, "rainbow")
    mono = _color_filter(subject, triangles, "mono")
    report = EnumerationReport(
        n=subject.n,
        k=subject.k,
        m=subject.m,
        empty_triangles=len(triangles),
        empty_rainbow_triangles=len(rainbow),
        empty_monochromatic_triangles=len(mono),
    )
    selected = _color_filter(subject, triangles, color_filter)
    if shape == "quad":
        quads = empty_quadrilaterals(subject, threads, budget, triangles=triangles)
        report.empty_quadrilaterals = len(quads.convex)
        report.empty_rainbow_quadrilaterals = sum(1 for w in quads.convex if w.rainbow)
        report.empty_monochromatic_quadrilaterals = len(_color_filter(subject, quads.convex, "mono"))
        report.empty_rainbow_nonconvex_quadrilaterals = sum(1 for w in quads.nonconvex if w.rainbow)
        selected = _color_filter(subject, quads.convex, color_filter)
    if with_witnesses:
        report.witnesses = [WitnessRecord.from_witness(w) for w in selected]
    return report


def selected_count(report: EnumerationReport, shape: str, color_filter: str) -> int:
    """The single count a ``count`` invocation is about.

    Raises
    ------
    InvalidArgumentError
        If the report holds no count for ``shape``.
    """

    fields = {
        "triangle": {
            "any": "empty_triangles",
            "rainbow": "empty_rainbow_triangles",
            "mono": "empty_monochromatic_triangles",
        },
        "quad": {
            "any": "empty_quadrilaterals",
            "rainbow": "empty_rainbow_quadrilaterals",
            "mono": "empty_monochromatic_quadrilaterals",
        },
    }
    value = getattr(report, fields[shape][color_filter])
    if value is None:
        raise InvalidArgumentError(f"The report was built without {shape} counts.")
    return value
