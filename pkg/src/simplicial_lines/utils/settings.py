"""User settings: defaults, ~/.config/simplicial-lines/config.json, environment."""

from __future__ import annotations

import json
import logging
import os
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path
from typing import Mapping, Optional

from .errors import ConfigError
from .graphs import CORPUS_LIMIT
from .shelling import DEFAULT_MAX_FACETS

logger = logging.getLogger(__name__)

ENV_MAX_FACETS = "SL_MAX_FACETS"
ENV_LOG_LEVEL = "SL_LOG_LEVEL"


@dataclass(frozen=True)
class Settings:
    max_facets: int = DEFAULT_MAX_FACETS
    corpus_limit: int = CORPUS_LIMIT
    log_level: str = "WARNING"
    output_format: str = "text"

    def to_dict(self) -> dict:
        return asdict(self)


def default_config_dir() -> Path:
    return Path.home() / ".config" / "simplicial-lines"


def _positive_int(name: str, raw, ceiling: Optional[int] = None) -> int:
    if isinstance(raw, bool):
        raise ConfigError(f"{name} must be a positive integer, got {raw!r}")
    try:
        value = int(raw)
    except (TypeError, ValueError):
        raise ConfigError(f"{name} must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise ConfigError(f"{name} must be a positive integer, got {raw!r}")
    if ceiling is not None and value > ceiling:
        raise ConfigError(f"{name} must be at most {ceiling}, got {value}")
    return value


def _load_file(config_file: Path) -> dict:
    """Read the optional config file; unreadable or malformed files are ignored."""
    if not config_file.exists():
        return {}
    try:
        with open(config_file, encoding="utf-8") as f:
            data = json.load(f)
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        logger.warning("Ignoring config file %s: %s", config_file, exc)
        return {}
    if not isinstance(data, dict):
        logger.warning("Ignoring config file %s: not a JSON object", config_file)
        return {}
    known = {f.name for f in fields(Settings)}
    unknown = set(data) - known
    if unknown:
        logger.warning("Unknown settings in %s: %s", config_file, ", ".join(sorted(unknown)))
    return {k: v for k, v in data.items() if k in known}


def load_settings(
    config_dir: Optional[Path] = None,
    environ: Optional[Mapping[str, str]] = None,
) -> Settings:
    """Defaults, then the config file, then SL_MAX_FACETS / SL_LOG_LEVEL."""
    if config_dir is None:
        config_dir = default_config_dir()
    if environ is None:
        environ = os.environ

    values = _load_file(config_dir / "config.json")
    if ENV_MAX_FACETS in environ:
        values["max_facets"] = environ[ENV_MAX_FACETS]
    if ENV_LOG_LEVEL in environ:
        values["log_level"] = environ[ENV_LOG_LEVEL]

    settings = replace(Settings(), **values)
    return replace(
        settings,
        max_facets=_positive_int("max_facets", settings.max_facets),
        corpus_limit=_positive_int("corpus_limit", settings.corpus_limit, ceiling=CORPUS_LIMIT),
        log_level=str(settings.log_level).upper(),
    )
