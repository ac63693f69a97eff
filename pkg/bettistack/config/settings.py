"""
Runtime settings for bettistack.

Resolution order for the settings file:
1) explicit path (CLI --config)
2) BETTISTACK_CONFIG environment variable
3) bettistack.yaml / bettistack.yml found walking up from the current directory
4) built-in defaults

Example:
  settings:
    default_char: 101
    workers: 4
    enumerate_max_vertices: 7
"""

from __future__ import annotations

import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml
from pydantic import BaseModel, ConfigDict, ValidationError, model_validator

from bettistack.algebra.field import DEFAULT_CHAR, is_prime
from bettistack.core.errors import SettingsError

logger = logging.getLogger(__name__)

ENV_VAR = "BETTISTACK_CONFIG"
CONFIG_FILENAMES = ("bettistack.yaml", "bettistack.yml")


class BettiSettings(BaseModel):
    model_config = ConfigDict(extra="forbid")

    default_char: int = DEFAULT_CHAR
    hochster_max_vertices: int = 20
    enumerate_max_vertices: int = 7
    enumerate_max_vertices_iso: int = 8
    # None = every available core
    workers: Optional[int] = None
    parallel_threshold: int = 64
    homology_cache_size: int = 65536
    seed: int = 0

    @model_validator(mode="after")
    def _validate_ranges(self) -> "BettiSettings":
        if not is_prime(self.default_char):
            raise ValueError(f"default_char must be prime, got {self.default_char}")
        for name in (
            "hochster_max_vertices",
            "enumerate_max_vertices",
            "enumerate_max_vertices_iso",
            "parallel_threshold",
            "homology_cache_size",
        ):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be a positive integer")
        if self.workers is not None and self.workers < 1:
            raise ValueError("workers must be a positive integer or null/omitted")
        return self


def _load_yaml(path: Path) -> Dict[str, Any]:
    """Load a YAML file as a top-level mapping; an empty file is empty configuration."""
    try:
        data = yaml.safe_load(path.read_text(encoding="utf-8")) or {}
    except OSError as exc:
        raise SettingsError(f"{path}: cannot read settings file: {exc}") from exc
    except yaml.YAMLError as exc:
        raise SettingsError(f"{path}: invalid YAML: {exc}") from exc
    if not isinstance(data, dict):
        raise SettingsError(f"{path}: settings file must contain a mapping at top-level")
    return data


def _find_project_config_file(start: Optional[Path] = None) -> Optional[Path]:
    """First bettistack.yaml/yml found walking from ``start`` (default cwd) to the root."""
    current = (start or Path.cwd()).resolve()
    while True:
        for filename in CONFIG_FILENAMES:
            candidate = current / filename
            if candidate.is_file():
                return candidate
        if current.parent == current:
            return None
        current = current.parent


def resolve_settings_path(path: Optional[Union[str, Path]] = None) -> Optional[Path]:
    if path is not None:
        explicit = Path(path).expanduser()
        if not explicit.is_file():
            raise SettingsError(f"settings file not found: {explicit}")
        return explicit
    env = os.environ.get(ENV_VAR)
    if env:
        from_env = Path(env).expanduser()
        if not from_env.is_file():
            raise SettingsError(f"{ENV_VAR} points to a missing file: {from_env}")
        return from_env
    return _find_project_config_file()


def parse_settings_dict(data: Dict[str, Any], *, path: Optional[Path] = None) -> BettiSettings:
    """Validate a loaded mapping; settings may sit under ``settings:`` or at top level."""
    where = str(path) if path else "<settings>"
    section = data["settings"] if "settings" in data else data
    if not isinstance(section, dict):
        raise SettingsError(f"{where}: 'settings' section must be a mapping")
    try:
        return BettiSettings.model_validate(section)
    except ValidationError as exc:
        raise SettingsError(f"{where}: invalid settings: {exc}") from exc


def load_settings(path: Optional[Union[str, Path]] = None) -> BettiSettings:
    """
    Load settings following the documented resolution order.

    Raises:
        SettingsError: if a named file is missing, unreadable, or invalid.
    """
    resolved = resolve_settings_path(path)
    if resolved is None:
        logger.debug("no settings file found; using defaults")
        return BettiSettings()
    logger.info("loading settings from %s", resolved)
    return parse_settings_dict(_load_yaml(resolved), path=resolved)
