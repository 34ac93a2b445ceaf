"""Entry point dispatching the ``rainbow`` sub-commands."""

from __future__ import annotations

import argparse
import logging
from typing import Sequence

from rainbow import __version__
from rainbow.cli import count, gen, plot, verify
from rainbow.cli.common import common_parser
from rainbow.core.errors import RainbowError, exit_code_for
from rainbow.core.logging_utils import configure_logging
from shared.utils.config_utils import ConfigError

LOGGER = logging.getLogger(__name__)

COMMANDS = {
    "gen": (gen, "Generate a point set and write it to a file."),
    "count": (count, "Count empty triangles or quadrilaterals of a point-set file."),
    "verify": (verify, "Verify a bound or structural claim."),
    "plot": (plot, "Render a point-set file as SVG."),
}


def build_parser() -> argparse.ArgumentParser:
    """Create the top-level parser with one sub-parser per command."""

    parser = argparse.ArgumentParser(prog="rainbow", description="Empty rainbow polygons in colored point sets.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    shared = common_parser()
    for name, (module, help_text) in COMMANDS.items():
        sub = subparsers.add_parser(name, parents=[shared], help=help_text, description=help_text)
        module.configure_parser(sub)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """CLI entrypoint; returns the process exit code."""

    parser = build_parser()
    args = parser.parse_args(argv)
    module, _ = COMMANDS[args.command]
    try:
        config = module.prepare_config(args)
    except ConfigError as exc:
        parser.error(str(exc))

    configure_logging(config["log_level"])
    try:
        return module.run(config)
    except RainbowError as exc:
        LOGGER.error("%s: %s", exc.code.value, exc)
        return exit_code_for(exc.code)


if __name__ == "__main__":  # pragma: no cover - CLI entrypoint
    raise SystemExit(main())
