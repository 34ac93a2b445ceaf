"""Configuration helpers shared by the rainbow command-line tools."""

from __future__ import annotations

import copy
from pathlib import Path
from typing import Any, Dict, Iterable, Mapping, Optional

from pydantic import ValidationError

from rainbow.core.logging_utils import LOG_LEVELS
from rainbow.core.settings import Settings
from shared.utils.config_utils import ConfigError, apply_overrides, load_config_file, merge_sections

DEFAULT_CONFIG_PATH = Path("shared/configs/rainbow_local.yaml")

OUTPUT_FORMATS = ("text", "json")

_DEFAULTS: Dict[str, Any] = {
    "budget": 10**9,
    "threads": 1,
    "log_level": "INFO",
    "output_format": "text",
    "plot": {
        "width_inches": 6.0,
        "height_inches": 6.0,
        "point_size": 18,
        "cluster_zoom": 1.0,
    },
    "random": {
        "grid_size": 1000,
        "max_attempts": 100_000,
    },
}


def _environment() -> Dict[str, Any]:
    """Values set through ``RAINBOW_*`` variables, ignoring unset fields."""

    try:
        env = Settings()
    except ValidationError as exc:
        raise ConfigError(f"Invalid RAINBOW_* environment value: {exc}") from exc
    return env.model_dump(exclude_unset=True)


def load_rainbow_config(config_path: Optional[Path], overrides: Mapping[str, Any]) -> Dict[str, Any]:
    """Defaults, then YAML, then environment, then non-``None`` CLI overrides."""

    config: Dict[str, Any] = copy.deepcopy(_DEFAULTS)

    resolved_path = config_path
    if resolved_path is None and DEFAULT_CONFIG_PATH.is_file():
        resolved_path = DEFAULT_CONFIG_PATH

    if resolved_path is not None:
        config = merge_sections(config, load_config_file(Path(resolved_path)))

    config.update(_environment())
    config = apply_overrides(config, overrides)
    validate_config(config)
    return config


def validate_config(config: Mapping[str, Any]) -> None:
    for key in ("budget", "threads"):
        value = config.get(key)
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise ConfigError(f"Configuration value '{key}' must be a positive integer, got {value!r}.")
    if str(config.get("log_level", "")).upper() not in LOG_LEVELS:
        raise ConfigError(f"Configuration value 'log_level' must be one of {', '.join(LOG_LEVELS)}.")
    if config.get("output_format") not in OUTPUT_FORMATS:
        raise ConfigError(f"Configuration value 'output_format' must be one of {', '.join(OUTPUT_FORMATS)}.")
    for section in ("plot", "random"):
        if not isinstance(config.get(section), Mapping):
            raise ConfigError(f"Configuration section '{section}' must be a mapping.")


def require_keys(config: Mapping[str, Any], keys: Iterable[str]) -> None:
    """Ensure that required configuration keys are available and non-null."""

    for key in keys:
        if config.get(key) is None:
            raise ConfigError(
                f"Configuration value '{key}' is required. Provide it via the YAML file or CLI flag."
            )
