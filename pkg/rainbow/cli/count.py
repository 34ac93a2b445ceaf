"""``rainbow count``: count empty polygons of a point-set file."""

from __future__ import annotations

import argparse
import logging
from pathlib import Path
from typing import Any, Dict, Mapping

from rainbow.cli.common import emit, prepare_base_config
from rainbow.core.enumeration import COLOR_FILTERS, count_report, selected_count
from rainbow.core.errors import EXIT_OK
from rainbow.io.pointsets import read_point_set, write_witnesses
from shared.utils.config_utils import expand_path

LOGGER = logging.getLogger(__name__)


def configure_parser(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("input", type=Path, help="Point-set file (.json or .csv).")
    parser.add_argument("--shape", choices=("triangle", "quad"), default="triangle", help="Polygon shape to count.")
    parser.add_argument("--filter", dest="color_filter", choices=COLOR_FILTERS, default="any", help="Color condition on the vertices.")
    parser.add_argument("--witnesses", action="store_true", help="Include the witness polygons in the report.")
    parser.add_argument("--witness-file", dest="witness_file", type=Path, default=None, help="Also write the witnesses to this file.")


def prepare_config(args: argparse.Namespace) -> Dict[str, Any]:
    return prepare_base_config(
        args,
        {
            "input": expand_path(args.input),
            "shape": args.shape,
            "color_filter": args.color_filter,
            "witnesses": args.witnesses,
            "witness_file": expand_path(args.witness_file),
        },
    )


def run(config: Mapping[str, Any]) -> int:
    subject = read_point_set(config["input"])
    want_witnesses = bool(config["witnesses"] or config.get("witness_file"))
    report = count_report(
        subject,
        shape=config["shape"],
        color_filter=config["color_filter"],
        threads=config["threads"],
        budget=config["budget"],
        with_witnesses=want_witnesses,
    )
    LOGGER.info(
        "%s %s count: %d",
        config["color_filter"], config["shape"], selected_count(report, config["shape"], config["color_filter"]),
    )
    if config.get("witness_file"):
        write_witnesses([record.to_witness() for record in report.witnesses or []], config["witness_file"])
    if not config["witnesses"]:
        report.witnesses = None
    emit(report, config["output_format"])
    return EXIT_OK
