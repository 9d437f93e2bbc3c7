from __future__ import annotations
from dataclasses import dataclass, fields
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Optional
import logging

import yaml

from ..models.errors import PreconditionError

logger = logging.getLogger(__name__)

DEFAULT_SETTINGS_PATH = Path(__file__).resolve().parents[2] / "config" / "defaults.yaml"

CONSISTENCY_MODES = {"auto", "always", "sampled", "off"}
OUTPUT_FORMATS = {"json", "text"}


@dataclass(frozen=True)
class Settings:
    """Documented defaults of the toolkit (see config/defaults.yaml)."""
    box_bound: int = 10000
    g_max: int = 5
    acceptance_box: int = 100
    specialization_box: int = 50
    consistency_checks: str = "auto"
    consistency_sample_stride: int = 7
    output_format: str = "text"

    def __post_init__(self):
        for name in ("box_bound", "g_max", "acceptance_box", "specialization_box", "consistency_sample_stride"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise PreconditionError(f"Setting '{name}' must be a positive integer, got {value!r}")
        if self.consistency_checks not in CONSISTENCY_MODES:
            raise PreconditionError(
                f"Setting 'consistency_checks' must be one of {sorted(CONSISTENCY_MODES)}, got {self.consistency_checks!r}")
        if self.output_format not in OUTPUT_FORMATS:
            raise PreconditionError(
                f"Setting 'output_format' must be one of {sorted(OUTPUT_FORMATS)}, got {self.output_format!r}")

    @property
    def effective_consistency_mode(self) -> str:
        """Resolve "auto" against the interpreter's assertion mode."""
        if self.consistency_checks != "auto":
            return self.consistency_checks
        return "always" if __debug__ else "sampled"

    def to_dict(self) -> Dict[str, Any]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def load_settings(path: Optional[str | Path] = None) -> Settings:
    """
    Load settings from a YAML file.

    Args:
        path: YAML file to read. Defaults to config/defaults.yaml.

    Returns:
        The parsed Settings; built-in defaults when the file does not exist.

    Raises:
        PreconditionError: If the file is not a mapping or a value has the wrong type.
    """
    file_path = Path(path) if path is not None else DEFAULT_SETTINGS_PATH
    if not file_path.exists():
        logger.warning(f"Settings file not found at {file_path}. Using built-in defaults.")
        return Settings()

    try:
        with open(file_path, 'r') as f:
            data = yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise PreconditionError(f"Could not parse settings file {file_path}: {e}")

    if data is None:
        logger.warning(f"Settings file {file_path} is empty. Using built-in defaults.")
        return Settings()
    if not isinstance(data, dict):
        raise PreconditionError(f"Settings file {file_path} must contain a mapping, got {type(data).__name__}")

    known = {f.name for f in fields(Settings)}
    unknown = set(data) - known
    if unknown:
        logger.warning(f"Ignoring unknown settings in {file_path}: {sorted(unknown)}")

    settings = Settings(**{k: v for k, v in data.items() if k in known})
    logger.debug(f"Loaded settings from {file_path}: {settings.to_dict()}")
    return settings


_active: Optional[Settings] = None


def use_settings(settings: Optional[Settings]) -> None:
    """Make `settings` the process-wide settings; None reverts to config/defaults.yaml."""
    global _active
    _active = settings


@lru_cache(maxsize=1)
def _default_settings() -> Settings:
    return load_settings()


def get_settings() -> Settings:
    """The active settings: those passed to use_settings, else config/defaults.yaml read once."""
    return _active if _active is not None else _default_settings()
