"""Guaranteed number of empty rainbow triangles and its constructive witnesses."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Dict, List, Set, Tuple

from rainbow.core.errors import DegenerateInputError, InvalidArgumentError
from rainbow.core.geometry import ColoredPointSet, PolygonWitness, cross, is_general_position

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class ColorContribution:
    rank: int
    r: int
    guaranteed: int


@dataclass(frozen=True)
class LowerBoundBreakdown:
    """Per-color terms ``(r_i - 1)(2i - r_i - 2) / 2`` and their total."""

    k: int
    m: int
    per_color: Tuple[ColorContribution, ...]

    @property
    def total(self) -> int:
        return sum(term.guaranteed for term in self.per_color)


def _validate(k: int, m: int) -> None:
    if k < 3:
        raise InvalidArgumentError(f"k must be at least 3, got {k}.")
    if m < 1:
        raise InvalidArgumentError(f"m must be at least 1, got {m}.")


def lower_bound_breakdown(k: int, m: int) -> LowerBoundBreakdown:
    _validate(k, m)
    terms = []
    for i in range(1, k + 1):
        r = min(i, m)
        terms.append(ColorContribution(rank=i, r=r, guaranteed=max(0, (r - 1) * (2 * i - r - 2) // 2)))
    return LowerBoundBreakdown(k=k, m=m, per_color=tuple(terms))


def lower_bound_sum(k: int, m: int) -> int:
    """Direct summation of the per-color terms for ``i = 3..k``."""

    return sum(term.guaranteed for term in lower_bound_breakdown(k, m).per_color if term.rank >= 3)


def lower_bound_formula(k: int, m: int) -> int:
    """Closed form of the guaranteed number of empty rainbow triangles."""

    _validate(k, m)
    k, m = Fraction(k), Fraction(m)
    if m >= k:
        value = k**3 / 6 - k**2 / 2 + k / 3
    else:
        value = k**2 * m / 2 - k * m**2 / 2 + m**3 / 6 - k**2 / 2 + k / 2 - m / 6
    if value.denominator != 1:  # pragma: no cover - the closed forms are integral
        raise ArithmeticError(f"Closed form is not integral for k={k}, m={m}: {value}")
    return int(value)


def lower_bound_witnesses(subject: ColoredPointSet) -> List[PolygonWitness]:
    """Re-enact the radial sweep that certifies the lower bound.

    Colors are ranked by the x-coordinate of their leftmost point. Around
    each of the first ``r_i - 1`` points of the color of rank ``i`` the
    points to its left are sorted by angle; consecutive pairs span empty
    triangles with that point as rightmost vertex and the rainbow ones are
    kept.
    """

    if subject.m is None or subject.k < 3:
        raise DegenerateInputError("Witness harvesting needs at least 3 colors with equal class sizes.")
    if not is_general_position(subject.points):
        raise DegenerateInputError("Witness harvesting needs general position and distinct x-coordinates.")

    coords = subject.int_coords
    by_color: Dict[int, List[int]] = {}
    for idx in sorted(range(subject.n), key=lambda i: coords[i][0]):
        by_color.setdefault(subject.colors[idx], []).append(idx)
    ranked = sorted(by_color, key=lambda color: coords[by_color[color][0]][0])

    found: Set[Tuple[int, int, int]] = set()
    for rank, color in enumerate(ranked, start=1):
        r = min(rank, subject.m)
        for apex in by_color[color][: max(r - 1, 0)]:
            origin = coords[apex]
            left = [q for q in range(subject.n) if coords[q][0] < origin[0]]
            left.sort(key=cmp_to_key(lambda u, v: -cross(origin, coords[u], coords[v])))
            for u, w in zip(left, left[1:]):
                if len({subject.colors[u], subject.colors[w], color}) == 3:
                    found.add(tuple(sorted((apex, u, w))))
    LOGGER.debug("Harvested %d rainbow witnesses from %d colors", len(found), subject.k)
    return [PolygonWitness(t, convex=True, empty=True, rainbow=True) for t in sorted(found)]
