"""Read config/config.yaml into a validated AppConfig."""

import logging
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml
from pydantic import ValidationError

from uncertframes.config.config_schema import AppConfig

DEFAULT_CONFIG_PATH = Path(__file__).parents[3] / "config" / "config.yaml"

# The file logger is itself built from this configuration.
logger = logging.getLogger(__name__)


class ConfigLoadError(Exception):
    """The configuration file is missing, unreadable or not a YAML mapping."""


class ConfigValidationError(Exception):
    """The configuration does not match AppConfig."""


def _describe(error: ValidationError) -> str:
    return "; ".join(
        f"{'.'.join(str(part) for part in item['loc'])}: {item['msg']}" for item in error.errors()
    )


class ConfigLoader:
    """
    Loads one YAML file and validates it against AppConfig.

    Raises ConfigLoadError when the file cannot be read or parsed and
    ConfigValidationError when a section or field is missing or out of range.
    """

    def __init__(self, config_file: Optional[Union[str, Path]] = None):
        self.config_file = Path(config_file) if config_file else DEFAULT_CONFIG_PATH
        self.config: AppConfig = self._validate(self._read())

    def _read(self) -> Dict[str, Any]:
        try:
            text = self.config_file.read_text()
        except OSError as e:
            logger.error("Cannot read config %s: %s", self.config_file, e)
            raise ConfigLoadError(f"Cannot read config file {self.config_file}: {e}") from e
        try:
            raw = yaml.safe_load(text)
        except yaml.YAMLError as e:
            raise ConfigLoadError(f"YAML parsing error in {self.config_file}: {e}") from e
        if not isinstance(raw, dict):
            raise ConfigLoadError(f"Config file is empty or not a mapping: {self.config_file}")
        return raw

    def _validate(self, raw: Dict[str, Any]) -> AppConfig:
        try:
            return AppConfig(**raw)
        except ValidationError as e:
            logger.error("Config %s failed validation", self.config_file)
            raise ConfigValidationError(f"Invalid configuration: {_describe(e)}") from e

    def get_config(self) -> AppConfig:
        return self.config
