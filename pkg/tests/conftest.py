"""Shared pytest configuration for the rainbow test suite."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from rainbow.core.geometry import ColoredPointSet, Point  # noqa: E402


def pytest_configure(config: pytest.Config) -> None:
    config.addinivalue_line("markers", "slow: heavier reproductions of the published bounds")


@pytest.fixture
def triangle_with_center() -> ColoredPointSet:
    """Triangle (0,0), (4,1), (1,5) with the point (2,2) inside, colors 1, 2, 3, 1."""

    points = [Point(0, 0), Point(4, 1), Point(1, 5), Point(2, 2)]
    return ColoredPointSet.from_points(points, [1, 2, 3, 1])


@pytest.fixture
def rainbow_square() -> ColoredPointSet:
    """Four points in convex position with four colors."""

    points = [Point(0, 0), Point(3, 1), Point(4, 5), Point(1, 4)]
    return ColoredPointSet.from_points(points, [1, 2, 3, 4])
