"""Render colored point sets as deterministic SVG files.

Colors come from a fixed palette indexed by color class, with a hashed
fallback beyond it. Tight same-colored groups can be drawn enlarged around
their centroid, and witness polygons can be overlaid.
"""

from __future__ import annotations

import hashlib
import logging
from pathlib import Path
from typing import Dict, List, Optional, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from matplotlib.patches import Polygon  # noqa: E402

from rainbow.core.errors import PlotError  # noqa: E402
from rainbow.core.geometry import ColoredPointSet, Point, PolygonWitness  # noqa: E402

LOGGER = logging.getLogger(__name__)

PALETTE = [
    "#e6194b",  # red
    "#3cb44b",  # green
    "#4363d8",  # blue
    "#f58231",  # orange
    "#911eb4",  # purple
    "#42d4f4",  # cyan
    "#f032e6",  # magenta
    "#9a6324",  # brown
    "#469990",  # teal
    "#808000",  # olive
    "#000075",  # navy
    "#a9a9a9",  # grey
]

# Groups whose extent is below this share of the whole drawing count as clusters.
CLUSTER_EXTENT_RATIO = 0.05


def color_for(color: int) -> str:
    """Palette entry for a color class, or a deterministic hashed color beyond it."""

    if 1 <= color <= len(PALETTE):
        return PALETTE[color - 1]
    digest = int(hashlib.md5(str(color).encode()).hexdigest(), 16)
    r, g, b = (max((digest >> shift) & 0xFF, 64) for shift in (16, 8, 0))
    return f"#{r:02x}{g:02x}{b:02x}"


def zoom_clusters(coords: np.ndarray, colors: Sequence[int], zoom: float) -> np.ndarray:
    """Scale each tight same-colored group about its centroid by ``zoom``."""

    if zoom == 1.0 or len(coords) < 2:
        return coords
    extent = float(np.ptp(coords, axis=0).max()) or 1.0
    zoomed = coords.copy()
    labels = np.asarray(colors)
    for color in np.unique(labels):
        members = labels == color
        group = coords[members]
        if len(group) < 2 or float(np.ptp(group, axis=0).max()) > CLUSTER_EXTENT_RATIO * extent:
            continue
        centre = group.mean(axis=0)
        zoomed[members] = centre + zoom * (group - centre)
    return zoomed


def render_points(
    points: Sequence[Point],
    colors: Sequence[int],
    out_path: Path,
    witnesses: Optional[Sequence[PolygonWitness]] = None,
    cluster_zoom: float = 1.0,
    width_inches: float = 6.0,
    height_inches: float = 6.0,
    point_size: float = 18,
    title: Optional[str] = None,
) -> Path:
    """Draw points (and optional witness polygons) to ``out_path`` as SVG.

    Raises
    ------
    PlotError
        If there is nothing to draw or the file cannot be written.
    """

    if not points:
        raise PlotError("Cannot plot an empty point set.")
    for witness in witnesses or []:
        if any(not 0 <= i < len(points) for i in witness.vertex_indices):
            raise PlotError(f"Witness {witness.vertex_indices} refers to points outside the set.")
    coords = zoom_clusters(np.array([[float(p.x), float(p.y)] for p in points]), colors, cluster_zoom)

    matplotlib.rcParams["svg.hashsalt"] = "rainbow"
    fig, ax = plt.subplots(figsize=(width_inches, height_inches))
    try:
        for witness in witnesses or []:
            vertices = coords[list(witness.vertex_indices)]
            ax.add_patch(
                Polygon(vertices, closed=True, facecolor="#ffe08a", edgecolor="#333333", alpha=0.5, linewidth=0.8)
            )
        by_color: Dict[int, List[int]] = {}
        for idx, color in enumerate(colors):
            by_color.setdefault(color, []).append(idx)
        for color in sorted(by_color):
            group = coords[by_color[color]]
            ax.scatter(group[:, 0], group[:, 1], s=point_size, c=color_for(color), label=f"color {color}", zorder=3)
        ax.set_aspect("equal", adjustable="datalim")
        ax.set_xticks([])
        ax.set_yticks([])
        if title:
            ax.set_title(title)
        if len(by_color) <= len(PALETTE):
            ax.legend(loc="best", fontsize="small", frameon=False)

        out_path = Path(out_path).expanduser()
        out_path.parent.mkdir(parents=True, exist_ok=True)
        fig.savefig(out_path, format="svg", metadata={"Date": None})
    except OSError as exc:
        raise PlotError(f"Could not write '{out_path}': {exc}") from exc
    finally:
        plt.close(fig)
    LOGGER.info("Saved plot of %d points to '%s'", len(points), out_path)
    return out_path


def render_point_set(subject: ColoredPointSet, out_path: Path, **options) -> Path:
    return render_points(subject.points, subject.colors, out_path, **options)
