"""``rainbow plot``: render a point-set file as SVG."""

from __future__ import annotations

import argparse
from pathlib import Path
from typing import Any, Dict, Mapping

from rainbow.cli.common import prepare_base_config
from rainbow.core.errors import EXIT_OK
from rainbow.io.pointsets import read_point_set, read_witnesses
from rainbow.plotting.svg import render_point_set
from shared.utils.config_utils import expand_path


def configure_parser(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("input", type=Path, help="Point-set file (.json or .csv).")
    parser.add_argument("--out", type=Path, required=True, help="Output SVG path.")
    parser.add_argument("--highlight", type=Path, default=None, help="Witness file whose polygons are overlaid.")
    parser.add_argument("--cluster-zoom", dest="cluster_zoom", type=float, default=None, help="Enlargement factor for tight clusters.")
    parser.add_argument("--title", default=None, help="Plot title.")


def prepare_config(args: argparse.Namespace) -> Dict[str, Any]:
    config = prepare_base_config(
        args,
        {"input": expand_path(args.input), "out": expand_path(args.out), "highlight": expand_path(args.highlight), "title": args.title},
    )
    if args.cluster_zoom is not None:
        config["plot"] = {**config["plot"], "cluster_zoom": args.cluster_zoom}
    return config


def run(config: Mapping[str, Any]) -> int:
    subject = read_point_set(config["input"])
    witnesses = read_witnesses(config["highlight"]) if config.get("highlight") else None
    plot = config["plot"]
    render_point_set(
        subject,
        config["out"],
        witnesses=witnesses,
        cluster_zoom=float(plot["cluster_zoom"]),
        width_inches=float(plot["width_inches"]),
        height_inches=float(plot["height_inches"]),
        point_size=float(plot["point_size"]),
        title=config.get("title"),
    )
    return EXIT_OK
