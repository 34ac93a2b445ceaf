"""Flags and output helpers shared by every sub-command."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Dict, Mapping

from pydantic import BaseModel

from rainbow.core.config import OUTPUT_FORMATS, load_rainbow_config
from rainbow.core.logging_utils import LOG_LEVELS


def common_parser() -> argparse.ArgumentParser:
    """Parent parser holding the flags every sub-command accepts."""

    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--config", type=Path, default=None, help="Path to a YAML configuration file.")
    parser.add_argument("--budget", type=int, default=None, help="Maximum elementary predicate calls per enumeration.")
    parser.add_argument("--threads", type=int, default=None, help="Worker processes used by the enumeration.")
    parser.add_argument(
        "--log-level",
        dest="log_level",
        default=None,
        choices=LOG_LEVELS,
        help="Python logging level to use for console output.",
    )
    parser.add_argument(
        "--format",
        dest="output_format",
        default=None,
        choices=OUTPUT_FORMATS,
        help="Report format written to stdout.",
    )
    return parser


def prepare_base_config(args: argparse.Namespace, extra: Mapping[str, Any] | None = None) -> Dict[str, Any]:
    overrides: Dict[str, Any] = {
        "budget": args.budget,
        "threads": args.threads,
        "log_level": args.log_level,
        "output_format": args.output_format,
    }
    overrides.update(extra or {})
    return load_rainbow_config(args.config, overrides)


def emit(report: BaseModel, output_format: str) -> None:
    """Write a report to stdout as JSON or as one ``key: value`` line per field."""

    data = report.model_dump(mode="json")
    if output_format == "json":
        sys.stdout.write(json.dumps(data, indent=2) + "\n")
        return
    for key, value in data.items():
        if value is None:
            continue
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        sys.stdout.write(f"{key}: {value}\n")
