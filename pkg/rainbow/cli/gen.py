"""``rainbow gen``: build a point set and write it to disk."""

from __future__ import annotations

import argparse
import logging
from pathlib import Path
from typing import Any, Dict, Mapping

from rainbow.cli.common import prepare_base_config
from rainbow.constructions.gadget import lemma4_gadget
from rainbow.constructions.no_quad import build_no_rainbow_quad_set
from rainbow.constructions.random_sets import random_colored_set
from rainbow.constructions.upper_bound import build_upper_bound_set
from rainbow.core.config import require_keys
from rainbow.core.errors import EXIT_OK
from rainbow.core.geometry import ColoredPointSet
from rainbow.core.horton import generate_horton
from rainbow.io.pointsets import write_point_set
from shared.utils.config_utils import expand_path

LOGGER = logging.getLogger(__name__)

KINDS = ("horton", "upper", "noquad", "gadget", "random")

_REQUIRED_KEYS = {
    "horton": ["n"],
    "upper": ["k", "m"],
    "noquad": ["k"],
    "gadget": [],
    "random": ["k", "m"],
}


def configure_parser(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("kind", choices=KINDS, help="Construction to generate.")
    parser.add_argument("--n", type=int, default=None, help="Number of Horton set points.")
    parser.add_argument("--k", type=int, default=None, help="Number of colors.")
    parser.add_argument("--m", type=int, default=None, help="Points per color.")
    parser.add_argument("--seed", type=int, default=0, help="Seed for random sets.")
    parser.add_argument("--drop", choices=("A", "B", "C"), default=None, help="Gadget corner whose auxiliary pair is left out.")
    parser.add_argument("--output", "-o", type=Path, required=True, help="Output point-set file (.json or .csv).")
    parser.add_argument("--file-format", dest="file_format", choices=("json", "csv"), default=None, help="Force the output format.")


def prepare_config(args: argparse.Namespace) -> Dict[str, Any]:
    """Load configuration and check the parameters ``kind`` needs."""

    config = prepare_base_config(
        args,
        {
            "kind": args.kind,
            "n": args.n,
            "k": args.k,
            "m": args.m,
            "seed": args.seed,
            "drop": args.drop,
            "output": expand_path(args.output),
            "file_format": args.file_format,
        },
    )
    require_keys(config, _REQUIRED_KEYS[config["kind"]])
    return config


def generate(config: Mapping[str, Any]) -> ColoredPointSet:
    kind = config["kind"]
    if kind == "horton":
        return ColoredPointSet.uncolored(generate_horton(config["n"]).points)
    if kind == "upper":
        subject, _ = build_upper_bound_set(config["k"], config["m"])
        return subject
    if kind == "noquad":
        return build_no_rainbow_quad_set(config["k"])
    if kind == "gadget":
        return lemma4_gadget(drop=config.get("drop"))
    return random_colored_set(
        config["k"],
        config["m"],
        seed=config["seed"],
        grid_size=config["random"]["grid_size"],
        max_attempts=config["random"]["max_attempts"],
    )


def run(config: Mapping[str, Any]) -> int:
    subject = generate(config)
    write_point_set(subject, config["output"], config.get("file_format"))
    return EXIT_OK
