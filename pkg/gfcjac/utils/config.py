"""
Configuration management for GFC-Jac
"""

import os
from typing import Any, Dict, Optional
from pathlib import Path

import toml

from gfcjac.core.errors import InputError


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw.replace("_", ""))
    except ValueError as e:
        raise InputError(f"environment variable {name} must be an integer, got {raw!r}") from e


class Config:
    """
    Library configuration: resource guards, numeric precision and logging.

    Environment variables (GFC_*) override the built-in defaults; an optional
    TOML file with a ``[gfcjac]`` table overrides both.
    """

    def __init__(self, config_file: Optional[str] = None):
        """
        Initialize configuration.

        Args:
            config_file: Optional path to a TOML configuration file
        """
        self._config: Dict[str, Any] = {}
        self._load_defaults()

        if config_file and Path(config_file).exists():
            self._load_from_file(config_file)

    def _load_defaults(self):
        """Load default configuration values."""
        self._config = {
            # Application
            "APP_NAME": "GFC-Jac",
            "APP_VERSION": "1.0.0",

            # Resource guards
            "MAX_GROUP_ORDER": _env_int("GFC_MAX_GROUP_ORDER", 20_000_000),
            "MAX_TUPLES": _env_int("GFC_MAX_TUPLES", 100_000_000),

            # Numerics
            "PRECISION": _env_int("GFC_PRECISION", 256),
            "MAX_WORKERS": _env_int("GFC_MAX_WORKERS", 1),

            # Logging
            "LOG_LEVEL": os.getenv("GFC_LOG_LEVEL", "INFO"),
            "LOG_FILE": os.getenv("GFC_LOG_FILE") or None,
        }

    def _load_from_file(self, config_file: str):
        """Load the ``[gfcjac]`` table of a TOML file; keys are upper-cased."""
        data = toml.load(config_file)
        section = data.get("gfcjac", {})
        if not isinstance(section, dict):
            raise ValueError(f"[gfcjac] in {config_file} must be a table")
        self._config.update({str(key).upper(): value for key, value in section.items()})

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get configuration value.

        Args:
            key: Configuration key
            default: Default value if key not found

        Returns:
            Configuration value or default
        """
        return self._config.get(key, default)

    def set(self, key: str, value: Any):
        """
        Set configuration value.

        Args:
            key: Configuration key
            value: Configuration value
        """
        self._config[key] = value

    def update(self, config_dict: Dict[str, Any]):
        """Update configuration with a dictionary."""
        self._config.update(config_dict)

    def to_dict(self) -> Dict[str, Any]:
        """
        Get configuration as dictionary.

        Returns:
            Configuration dictionary
        """
        return self._config.copy()


def max_group_order() -> int:
    """Current group-order guard (re-reads the environment)."""
    return int(Config().get("MAX_GROUP_ORDER"))


def default_precision() -> int:
    """Current default BigComplex precision in bits."""
    return int(Config().get("PRECISION"))
