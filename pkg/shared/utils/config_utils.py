"""Helpers for reading YAML configuration files and layering overrides on top."""

from __future__ import annotations

import os
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

import yaml


class ConfigError(Exception):
    """Raised when configuration loading or validation fails."""


def load_config_file(config_path: Path) -> Dict[str, Any]:
    """Read a YAML mapping from ``config_path``.

    Parameters
    ----------
    config_path:
        Path to the YAML configuration file.

    Raises
    ------
    ConfigError
        If the file is missing, cannot be parsed, or is not a mapping.
    """

    path = expand_path(config_path)
    if path is None or not path.is_file():
        raise ConfigError(f"Configuration file '{config_path}' was not found.")

    try:
        data = yaml.safe_load(path.read_text(encoding="utf-8"))
    except yaml.YAMLError as exc:
        raise ConfigError(f"Could not parse configuration file '{path}': {exc}") from exc

    if data is None:
        return {}
    if not isinstance(data, Mapping):
        raise ConfigError(f"Configuration file '{path}' must define a mapping at the top level.")

    return dict(data)


def merge_sections(base: Mapping[str, Any], update: Mapping[str, Any]) -> Dict[str, Any]:
    """Merge ``update`` into ``base``; nested mappings are merged key by key."""

    merged: Dict[str, Any] = dict(base)
    for key, value in update.items():
        if isinstance(value, Mapping) and isinstance(merged.get(key), Mapping):
            merged[key] = merge_sections(merged[key], value)
        else:
            merged[key] = value
    return merged


def apply_overrides(config: Mapping[str, Any], overrides: Mapping[str, Any]) -> Dict[str, Any]:
    """Return ``config`` with every non-``None`` override layered on top.

    ``config`` itself is left untouched.
    """

    return merge_sections(config, {key: value for key, value in overrides.items() if value is not None})


def expand_path(value: Optional[str | Path]) -> Optional[Path]:
    """Path from a user-supplied value, with ``~`` and ``$VAR`` expanded."""

    if value is None:
        return None
    return Path(os.path.expandvars(str(value))).expanduser()
