"""
Runtime settings for the CLI and the checked/fast pullback modes.

Settings come from three layers, highest priority first:
  1. explicit values (CLI flags, or the YAML config file)
  2. environment variables (PATTERNMAP_MODE, PATTERNMAP_THEORY, ...)
  3. built-in defaults

Config file format (patternmap.yml):

    patternmap:
      mode: checked          # checked | fast
      theory: coh            # coh | K
      format: text           # text | json | dot
      log_level: INFO
      log_file: ${HOME}/patternmap.log
      fixtures: ./my-paper.yml
"""

from __future__ import annotations

import os
from dataclasses import asdict, dataclass, fields
from enum import Enum
from pathlib import Path
from typing import Any

import yaml

from patternmap.base.errors import ConfigError


class Mode(str, Enum):
    """How many independent routes a pullback computation runs."""
    CHECKED = "checked"
    FAST = "fast"


class Theory(str, Enum):
    COHOMOLOGY = "coh"
    K_THEORY = "K"


OUTPUT_FORMATS = ("text", "json", "dot")

ENV_KEYS = {
    "mode": "PATTERNMAP_MODE",
    "theory": "PATTERNMAP_THEORY",
    "format": "PATTERNMAP_FORMAT",
    "log_level": "PATTERNMAP_LOG_LEVEL",
    "log_file": "PATTERNMAP_LOG_FILE",
    "fixtures": "PATTERNMAP_FIXTURES",
}


def expand_env(value: Any, default: Any = None) -> Any:
    """Expand a "${NAME}" string from the environment; other values pass through."""
    if isinstance(value, str) and value.startswith("${") and value.endswith("}"):
        return os.environ.get(value[2:-1], default)
    return value


def get_config(config: dict[str, Any], key: str, default: Any = None, env_key: str | None = None) -> Any:
    """
    Get a config value. Checks:
    1. The config dict (with ${ENV} expansion)
    2. Environment variable (if env_key provided)
    3. Default value
    """
    value = config.get(key)
    if value is not None:
        return expand_env(value, default)
    if env_key:
        return os.environ.get(env_key, default)
    return default


@dataclass
class Settings:
    """Resolved settings. Construct with from_dict/from_config, not by hand."""
    mode: Mode = Mode.CHECKED
    theory: Theory = Theory.COHOMOLOGY
    format: str = "text"
    log_level: str = "WARNING"
    log_file: str | None = None
    fixtures: str | None = None

    def __post_init__(self) -> None:
        try:
            self.mode = Mode(self.mode)
        except ValueError:
            raise ConfigError(f"mode must be one of {[m.value for m in Mode]}, got: {self.mode}")
        try:
            self.theory = Theory(self.theory)
        except ValueError:
            raise ConfigError(f"theory must be one of {[t.value for t in Theory]}, got: {self.theory}")
        if self.format not in OUTPUT_FORMATS:
            raise ConfigError(f"format must be one of {list(OUTPUT_FORMATS)}, got: {self.format}")

    @classmethod
    def from_dict(cls, data: dict[str, Any] | None = None) -> Settings:
        data = data or {}
        unknown = set(data) - {f.name for f in fields(cls)}
        if unknown:
            raise ConfigError(f"Unknown config keys: {sorted(unknown)}")
        resolved = {}
        for f in fields(cls):
            value = get_config(data, f.name, env_key=ENV_KEYS.get(f.name))
            if value is not None:
                resolved[f.name] = value
        return cls(**resolved)

    @classmethod
    def from_config(cls, config_path: str | Path) -> Settings:
        """Create settings from a patternmap.yml file."""
        config_path = Path(config_path)
        if not config_path.exists():
            raise FileNotFoundError(f"Config not found: {config_path}")

        with open(config_path) as f:
            try:
                raw = yaml.safe_load(f) or {}
            except yaml.YAMLError as e:
                raise ConfigError(f"Invalid YAML in {config_path}: {e}")

        if not isinstance(raw, dict):
            raise ConfigError("Config file must be a YAML mapping")
        section = raw.get("patternmap", {})
        if not isinstance(section, dict):
            raise ConfigError("'patternmap' section must be a mapping")
        return cls.from_dict(section)

    def override(self, **values: Any) -> Settings:
        """Return a copy with the non-None values replaced (CLI flags)."""
        merged = self.to_dict()
        merged.update({k: v for k, v in values.items() if v is not None})
        return Settings(**merged)

    def to_dict(self) -> dict[str, Any]:
        data = asdict(self)
        data["mode"] = self.mode.value
        data["theory"] = self.theory.value
        return data
