"""Horton-cluster sets with few empty rainbow triangles.

Every point ``p_i`` of a ``k``-point Horton set is replaced by a cluster of
``m`` points of color ``i``. Some cluster points are blockers: they sit in a
prescribed radius band (a layer) around ``p_i`` and in a prescribed
direction, so that they lie inside every triangle spanned by a closer point
of the cluster and two other clusters in a given angular cone. The radii
``eps_1 > ... > eps_{r+1}`` are halved until each blocking obligation is
certified exactly.

Distances to a cluster centre are measured in the L-infinity norm.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
from math import floor
from typing import Dict, List, Optional, Sequence, Tuple

from rainbow.constructions.certificates import inside_all_triangles, point_line_distance_lower_bound
from rainbow.constructions.lower_bound import lower_bound_formula
from rainbow.core.enumeration import empty_rainbow_triangles
from rainbow.core.errors import ConstructionError, InvalidArgumentError
from rainbow.core.geometry import ColoredPointSet, Point, PolygonWitness, cross, is_general_position, validate_witness
from rainbow.core.horton import HortonSet, address_indices, generate_horton, layer_bound, triangle_layer

LOGGER = logging.getLogger(__name__)

Direction = Tuple[Fraction, Fraction]

PAIR = "pair"
GAP = "gap"

MAX_ROUNDS = 24
MAX_HALVINGS = 48
MAX_PLACEMENT_ATTEMPTS = 6
_ORIGIN = (Fraction(0), Fraction(0))


def ceil_log2(k: int) -> int:
    return (k - 1).bit_length()


def blocker_layers(k: int, m: int) -> int:
    """Number of layers ``r = min(ceil(log2 k) + 2, ceil(m / 2))``."""

    return min(ceil_log2(k) + 2, (m + 1) // 2)


@dataclass(frozen=True)
class Blocker:
    """A cluster point with the Horton pairs ``(j, l)`` whose triangles it must block."""

    cluster: int
    index: int
    layer: int
    kind: str
    direction: Direction
    obligations: Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class BlockerSchedule:
    """Radii and per-cluster rosters of a constructed set.

    ``paired``, ``gaps`` and ``fillers`` hold point indices per cluster.
    """

    epsilons: Tuple[Fraction, ...]
    r: int
    paired: Tuple[Tuple[int, ...], ...]
    gaps: Tuple[Tuple[int, ...], ...]
    fillers: Tuple[Tuple[int, ...], ...]
    blockers: Tuple[Blocker, ...]
    horton: HortonSet = field(repr=False)

    def cluster_of(self, index: int) -> int:
        m = len(self.paired[0]) + len(self.gaps[0]) + len(self.fillers[0])
        return index // m

    def radius(self, layer: int) -> Fraction:
        return self.epsilons[layer - 1]


@dataclass(frozen=True)
class _Planned:
    direction: Optional[Direction]
    layer: int
    kind: str


# ---------------------------------------------------------------------------
# Angular helpers around a cluster centre
# ---------------------------------------------------------------------------


def _direction(origin: Point, target: Point) -> Direction:
    return (target.x - origin.x, target.y - origin.y)


def _ccw_within_halfplane(first: Direction, second: Direction) -> int:
    turn = cross(_ORIGIN, first, second)
    return -1 if turn > 0 else (1 if turn < 0 else 0)


def _next_ccw(start: Direction, others: Sequence[Direction]) -> Optional[Direction]:
    """The direction among ``others`` reached first when turning counterclockwise from ``start`` by less than pi."""

    ahead = [d for d in others if cross(_ORIGIN, start, d) > 0]
    return min(ahead, key=cmp_to_key(_ccw_within_halfplane)) if ahead else None


def _previous_cw(start: Direction, others: Sequence[Direction]) -> Optional[Direction]:
    behind = [d for d in others if cross(_ORIGIN, d, start) > 0]
    return max(behind, key=cmp_to_key(_ccw_within_halfplane)) if behind else None


def _perp(d: Direction) -> Direction:
    return (-d[1], d[0])


def _combine(a: Direction, b: Direction, weight: Fraction) -> Direction:
    return (a[0] + weight * b[0], a[1] + weight * b[1])


def _l1(d: Direction) -> Fraction:
    return abs(d[0]) + abs(d[1])


def _clear_of(u: Direction, others: Sequence[Direction]) -> bool:
    return all(cross(_ORIGIN, u, d) != 0 for d in others)


def _just_after(first: Direction, others: Sequence[Direction]) -> Direction:
    bound = _next_ccw(first, others)
    weight = Fraction(1, 2)
    for _ in range(MAX_HALVINGS):
        u = _combine(first, _perp(first), weight)
        if (bound is None or cross(_ORIGIN, u, bound) > 0) and _clear_of(u, others):
            return u
        weight /= 2
    raise ConstructionError("No blocker direction fits after the first sibling point.")


def _just_before(last: Direction, others: Sequence[Direction]) -> Direction:
    bound = _previous_cw(last, others)
    weight = Fraction(-1, 2)
    for _ in range(MAX_HALVINGS):
        u = _combine(last, _perp(last), weight)
        if (bound is None or cross(_ORIGIN, bound, u) > 0) and _clear_of(u, others):
            return u
        weight /= 2
    raise ConstructionError("No blocker direction fits before the last sibling point.")


def _between(a: Direction, b: Direction, others: Sequence[Direction]) -> Direction:
    base = (a[0] / _l1(a), a[1] / _l1(a))
    tail = (b[0] / _l1(b), b[1] / _l1(b))
    weight = Fraction(1)
    for step in range(MAX_HALVINGS):
        u = _combine(base, tail, weight)
        if _clear_of(u, others):
            return u
        weight = 1 + Fraction(1, 2 ** (step + 1))
    raise ConstructionError("No gap blocker direction avoids the cluster centres.")


# ---------------------------------------------------------------------------
# Planning
# ---------------------------------------------------------------------------


def _bits(i: int, depth: int) -> str:
    return "".join(str((i >> b) & 1) for b in range(depth))


def _address_depth(k: int, i: int) -> int:
    """Length of the shortest address isolating ``p_i``."""

    depth = 0
    while len(address_indices(k, _bits(i, depth))) > 1:
        depth += 1
    return depth


def _siblings(k: int, i: int, level: int) -> List[int]:
    """Points of ``H_{s_t b}`` where ``b`` is the opposite of ``p_i``'s bit ``t``."""

    flipped = _bits(i, level) + str(1 - ((i >> level) & 1))
    return address_indices(k, flipped)


def _plan_cluster(centers: Sequence[Point], k: int, m: int, r: int, i: int) -> List[_Planned]:
    others = [_direction(centers[i], centers[j]) for j in range(k) if j != i]
    depth = _address_depth(k, i)
    cmp = cmp_to_key(_ccw_within_halfplane)
    sibling_dirs = [
        sorted((_direction(centers[i], centers[j]) for j in _siblings(k, i, level)), key=cmp)
        for level in range(depth)
    ]

    planned: List[_Planned] = []
    # Paired blockers use levels 0..depth-2 while gap blockers use 0..depth-1.
    for level in range(max(depth - 1, 0)):
        if len(planned) + 2 > m or level + 1 > r:
            break
        ordered = sibling_dirs[level]
        planned.append(_Planned(_just_after(ordered[0], others), level + 1, PAIR))
        planned.append(_Planned(_just_before(ordered[-1], others), level + 1, PAIR))
    if m - len(planned) >= k:
        for level in range(depth):
            ordered = sibling_dirs[level]
            for a, b in zip(ordered, ordered[1:]):
                planned.append(_Planned(_between(a, b, others), r, GAP))
    while len(planned) < m:
        planned.append(_Planned(None, r + 1, "filler"))
    return planned


def _obligations(centers: Sequence[Point], i: int, u: Direction) -> Tuple[Tuple[int, int], ...]:
    """Horton pairs ``(j, l)`` whose cone at ``p_i`` strictly contains direction ``u``."""

    found = []
    for j, l in combinations([x for x in range(len(centers)) if x != i], 2):
        dj = _direction(centers[i], centers[j])
        dl = _direction(centers[i], centers[l])
        spread = cross(_ORIGIN, dj, dl)
        if spread == 0:
            continue
        sign = 1 if spread > 0 else -1
        if sign * cross(_ORIGIN, dj, u) > 0 and sign * cross(_ORIGIN, u, dl) > 0:
            found.append((j, l))
    return tuple(found)


# ---------------------------------------------------------------------------
# Radii
# ---------------------------------------------------------------------------


def _initial_radius(centers: Sequence[Point]) -> Fraction:
    coords = [(c.x, c.y) for c in centers]
    gaps = [
        max(abs(a[0] - b[0]), abs(a[1] - b[1]))
        for a, b in combinations(coords, 2)
    ]
    for a, b, c in combinations(coords, 3):
        gaps.extend(
            point_line_distance_lower_bound(p, u, v)
            for p, (u, v) in ((a, (b, c)), (b, (a, c)), (c, (a, b)))
        )
    return Fraction(min(gaps)) / 4


def _offset(direction: Direction, radius: Fraction) -> Point:
    norm = max(abs(direction[0]), abs(direction[1]))
    return Point(direction[0] * radius / norm, direction[1] * radius / norm)


def _band_factor(slot: int, m: int, attempt: int) -> Fraction:
    return 1 - Fraction(slot + 1, 4 * m) * (1 + Fraction(attempt, 8))


def _filler_offset(position: int, count: int, radius: Fraction, attempt: int) -> Point:
    if position == 0:
        return Point(0, 0)
    s = Fraction(position, count)
    tilt = Fraction((-1) ** attempt * attempt, 5)
    return Point(radius * s / 2, radius * (s * s + tilt * s) / (2 * (1 + abs(tilt))))


def _blocks(q: Point, apex: Point, apex_radius: Fraction, centers: Sequence[Point], eps1: Fraction, pair: Tuple[int, int]) -> bool:
    j, l = pair
    return inside_all_triangles(q, [(apex, apex_radius), (centers[j], eps1), (centers[l], eps1)])


def _choose_radii(
    centers: Sequence[Point],
    plans: Sequence[Sequence[_Planned]],
    obligations: Dict[Tuple[int, int], Tuple[Tuple[int, int], ...]],
    r: int,
    m: int,
    attempt: int,
) -> Optional[List[Fraction]]:
    """Pick ``eps_1 .. eps_{r+1}`` layer by layer, or ``None`` if ``eps_1`` must shrink."""

    eps1 = _initial_radius(centers)
    for _ in range(MAX_ROUNDS):
        epsilons = [eps1]
        for layer in range(1, r + 1):
            here = [
                (i, slot, plan)
                for i, cluster in enumerate(plans)
                for slot, plan in enumerate(cluster)
                if plan.direction is not None and plan.layer == layer
            ]
            radius = epsilons[-1]
            placed = [
                (i, slot, centers[i] + _offset(plan.direction, radius * _band_factor(slot, m, attempt)))
                for i, slot, plan in here
            ]
            candidate = radius / 2
            for _ in range(MAX_HALVINGS):
                if all(
                    _blocks(q, centers[i], candidate, centers, eps1, pair)
                    for i, slot, q in placed
                    for pair in obligations[(i, slot)]
                ):
                    break
                candidate /= 2
            else:
                break
            epsilons.append(candidate)
        if len(epsilons) == r + 1:
            return epsilons
        eps1 /= 2
        LOGGER.debug("Shrinking eps_1 to %s", eps1)
    return None


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------


def build_upper_bound_set(k: int, m: int) -> Tuple[ColoredPointSet, BlockerSchedule]:
    """Build the ``k * m``-point clustered Horton set and its blocker schedule."""

    if k < 3:
        raise InvalidArgumentError(f"k must be at least 3, got {k}.")
    if m < 1:
        raise InvalidArgumentError(f"m must be at least 1, got {m}.")

    horton = generate_horton(k)
    centers = horton.points
    r = blocker_layers(k, m)
    plans = [_plan_cluster(centers, k, m, r, i) for i in range(k)]
    obligations = {
        (i, slot): _obligations(centers, i, plan.direction)
        for i, cluster in enumerate(plans)
        for slot, plan in enumerate(cluster)
        if plan.direction is not None
    }

    for attempt in range(MAX_PLACEMENT_ATTEMPTS):
        epsilons = _choose_radii(centers, plans, obligations, r, m, attempt)
        if epsilons is None:
            raise ConstructionError(f"Blocking obligations could not be certified for k={k}, m={m}.")
        subject, schedule = _realize(horton, plans, obligations, epsilons, r, m, attempt)
        if is_general_position(subject.points):
            LOGGER.info(
                "Built upper-bound set k=%d m=%d with %d blockers over %d layers",
                k, m, len(schedule.blockers), r,
            )
            return subject, schedule
        LOGGER.debug("Placement attempt %d is degenerate, retrying", attempt)
    raise ConstructionError(f"No general-position placement found for k={k}, m={m}.")


def _realize(
    horton: HortonSet,
    plans: Sequence[Sequence[_Planned]],
    obligations: Dict[Tuple[int, int], Tuple[Tuple[int, int], ...]],
    epsilons: Sequence[Fraction],
    r: int,
    m: int,
    attempt: int,
) -> Tuple[ColoredPointSet, BlockerSchedule]:
    centers = horton.points
    points: List[Point] = []
    colors: List[int] = []
    paired, gaps, fillers = [], [], []
    blockers: List[Blocker] = []
    for i, cluster in enumerate(plans):
        roster = {PAIR: [], GAP: [], "filler": []}
        filler_count = sum(1 for plan in cluster if plan.direction is None)
        filler_position = 0
        for slot, plan in enumerate(cluster):
            index = i * m + slot
            if plan.direction is None:
                offset = _filler_offset(filler_position, filler_count, epsilons[r], attempt)
                filler_position += 1
            else:
                radius = epsilons[plan.layer - 1] * _band_factor(slot, m, attempt)
                offset = _offset(plan.direction, radius)
                blockers.append(
                    Blocker(i, index, plan.layer, plan.kind, plan.direction, obligations[(i, slot)])
                )
            points.append(centers[i] + offset)
            colors.append(i + 1)
            roster[plan.kind].append(index)
        paired.append(tuple(roster[PAIR]))
        gaps.append(tuple(roster[GAP]))
        fillers.append(tuple(roster["filler"]))
    schedule = BlockerSchedule(
        epsilons=tuple(epsilons),
        r=r,
        paired=tuple(paired),
        gaps=tuple(gaps),
        fillers=tuple(fillers),
        blockers=tuple(blockers),
        horton=horton,
    )
    return ColoredPointSet(tuple(points), tuple(colors), len(plans), m), schedule


def blocking_violations(subject: ColoredPointSet, schedule: BlockerSchedule) -> List[Tuple[int, Tuple[int, int]]]:
    """Re-check every obligation; returns ``(blocker index, pair)`` for each failure."""

    centers = schedule.horton.points
    eps1 = schedule.epsilons[0]
    failures = []
    for blocker in schedule.blockers:
        q = subject.points[blocker.index]
        apex_radius = schedule.epsilons[blocker.layer]
        for pair in blocker.obligations:
            if not _blocks(q, centers[blocker.cluster], apex_radius, centers, eps1, pair):
                failures.append((blocker.index, pair))
    return failures


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


def upper_bound_value(k: int, m: int) -> int:
    """``384 k^2 min(m, k + 2 ceil(log2 k))``."""

    return 384 * k * k * min(m, k + 2 * ceil_log2(k))


def triangle_multiplicity(k: int, m: int, depth: int) -> int:
    """Bound on rainbow triangles realising one Horton triangle whose address has length ``depth``."""

    cap = k + 2 * ceil_log2(k)
    if m <= 2 * depth + 1:
        return m**3
    if m < cap:
        return 4 * (depth + 1) ** 2 * m
    return 4 * (depth + 1) ** 2 * cap


@dataclass(frozen=True)
class UpperBoundReport:
    k: int
    m: int
    count: int
    bound: int
    lower_bound: int
    layer_histogram: Dict[int, int]
    layer_bounds: Dict[int, int]
    distinct_clusters: bool
    invalid_witnesses: int = 0

    @property
    def passed(self) -> bool:
        return self.count <= self.bound and self.invalid_witnesses == 0


def rainbow_layer_histogram(schedule: BlockerSchedule, triangles: Sequence[PolygonWitness], m: int) -> Dict[int, int]:
    """Tally rainbow triangles by the layer of the Horton triangle of their clusters."""

    layers = Counter()
    for witness in triangles:
        clusters = tuple(sorted(index // m for index in witness.vertex_indices))
        layers[triangle_layer(schedule.horton, PolygonWitness(clusters))] += 1
    return dict(sorted(layers.items()))


def verify_theorem1_upper(
    k: int,
    m: int,
    threads: int = 1,
    budget: Optional[int] = None,
) -> UpperBoundReport:
    """Build the set, count its empty rainbow triangles and compare with the bound."""

    subject, schedule = build_upper_bound_set(k, m)
    rainbow = empty_rainbow_triangles(subject, threads=threads, budget=budget)
    histogram = rainbow_layer_histogram(schedule, rainbow, m)
    layer_bounds = {
        layer: floor(layer_bound(k, layer) * triangle_multiplicity(k, m, layer - 1))
        for layer in histogram
    }
    distinct = all(len({index // m for index in w.vertex_indices}) == 3 for w in rainbow)
    invalid = sum(1 for w in rainbow if not validate_witness(subject, w))
    report = UpperBoundReport(
        k=k,
        m=m,
        count=len(rainbow),
        bound=upper_bound_value(k, m),
        lower_bound=lower_bound_formula(k, m),
        layer_histogram=histogram,
        layer_bounds=layer_bounds,
        distinct_clusters=distinct,
        invalid_witnesses=invalid,
    )
    LOGGER.info("k=%d m=%d: %d empty rainbow triangles, bound %d", k, m, report.count, report.bound)
    return report
