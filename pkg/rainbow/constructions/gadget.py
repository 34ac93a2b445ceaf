"""A small colored set with no empty rainbow quadrilateral.

Three mutually visible corners ``A``, ``B`` and ``C`` (colors 1, 2 and 3)
each carry two auxiliary points of color 4 just inside the corner. At every
corner the pair hugs one side: ``A`` hugs ``AC``, ``B`` hugs ``BA`` and ``C``
hugs ``CB``. Any rainbow 4-gon must use all three corners plus one auxiliary
point, and the other point of the pair next to it always ends up inside.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from rainbow.core.errors import InvalidArgumentError
from rainbow.core.geometry import ColoredPointSet, Point

LOGGER = logging.getLogger(__name__)

CORNERS: Dict[str, Point] = {
    "A": Point(0, 0),
    "B": Point(100, 10),
    "C": Point(40, 90),
}
CORNER_COLORS = {"A": 1, "B": 2, "C": 3}
AUXILIARY_COLOR = 4

# corner -> (side it hugs, opposite side)
_HUGS = {"A": ("C", "B"), "B": ("A", "C"), "C": ("B", "A")}

_RADIUS = Fraction(2)
_NEAR = Fraction(1, 2000)
_FAR = Fraction(1, 1000)
_PULL = Fraction(1, 100)


def _unit_l1(origin: Point, target: Point) -> Point:
    delta = target - origin
    return delta.scaled(1 / (abs(delta.x) + abs(delta.y)))


def auxiliary_pair(corner: str) -> Tuple[Point, Point]:
    """The two color-4 points near ``corner``; the first is closer to the hugged side."""

    origin = CORNERS[corner]
    hugged, other = _HUGS[corner]
    along = _unit_l1(origin, CORNERS[hugged])
    away = _unit_l1(origin, CORNERS[other])
    near = origin + (along + away.scaled(_NEAR)).scaled(_RADIUS)
    # Pulled slightly back towards the corner so that each point of the pair
    # lies inside the thin triangle cut off by the other one.
    far = origin + (along.scaled(1 - _PULL) + away.scaled(_FAR)).scaled(_RADIUS)
    return near, far


def lemma4_gadget(drop: Optional[str] = None) -> ColoredPointSet:
    """Build the gadget; ``drop`` removes the auxiliary pair of one corner."""

    if drop is not None and drop not in CORNERS:
        raise InvalidArgumentError(f"drop must be one of {sorted(CORNERS)}, got {drop!r}.")
    points: List[Point] = []
    colors: List[int] = []
    for name, corner in CORNERS.items():
        points.append(corner)
        colors.append(CORNER_COLORS[name])
    for name in CORNERS:
        if name == drop:
            continue
        points.extend(auxiliary_pair(name))
        colors.extend((AUXILIARY_COLOR, AUXILIARY_COLOR))
    LOGGER.debug("Gadget with %d points (dropped: %s)", len(points), drop)
    return ColoredPointSet.from_points(points, colors)
