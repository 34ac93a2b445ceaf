"""Seeded random colored sets in general position."""

from __future__ import annotations

import logging
from typing import List, Set

import numpy as np

from rainbow.core.errors import ConstructionError, InvalidArgumentError
from rainbow.core.geometry import ColoredPointSet, IntPoint, Point, cross

LOGGER = logging.getLogger(__name__)

DEFAULT_GRID_SIZE = 1000
DEFAULT_MAX_ATTEMPTS = 100_000


def random_colored_set(
    k: int,
    m: int,
    seed: int = 0,
    grid_size: int = DEFAULT_GRID_SIZE,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
) -> ColoredPointSet:
    """Draw ``k * m`` grid points, rejecting repeated x-coordinates and collinear triples.

    Colors are assigned round-robin in draw order, so every class has ``m``
    points. The same arguments always give the same set.
    """

    if k < 1 or m < 1:
        raise InvalidArgumentError(f"k and m must be positive, got k={k}, m={m}.")
    n = k * m
    if n > grid_size:
        raise InvalidArgumentError(f"A grid of size {grid_size} cannot hold {n} distinct x-coordinates.")

    rng = np.random.default_rng(seed)
    chosen: List[IntPoint] = []
    used_x: Set[int] = set()
    attempts = 0
    while len(chosen) < n:
        attempts += 1
        if attempts > max_attempts:
            raise ConstructionError(f"No general-position sample after {max_attempts} draws (n={n}, grid={grid_size}).")
        x, y = (int(v) for v in rng.integers(0, grid_size, size=2))
        if x in used_x:
            continue
        candidate = (x, y)
        if any(cross(a, b, candidate) == 0 for i, a in enumerate(chosen) for b in chosen[i + 1:]):
            continue
        chosen.append(candidate)
        used_x.add(x)
    LOGGER.debug("Sampled %d points in %d draws (seed=%d)", n, attempts, seed)
    colors = [1 + idx % k for idx in range(n)]
    return ColoredPointSet(tuple(Point(x, y) for x, y in chosen), tuple(colors), k, m)
