"""Logging setup shared by the command-line entrypoints."""

from __future__ import annotations

import logging
import sys

LOG_LEVELS = ["CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG"]


def configure_logging(log_level: str) -> None:
    logging.basicConfig(
        level=getattr(logging, log_level.upper(), logging.INFO),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
        force=True,
    )


def progress_enabled(logger: logging.Logger) -> bool:
    """Return whether tqdm progress bars should be shown for ``logger``."""

    return logger.isEnabledFor(logging.INFO) and sys.stderr.isatty()
