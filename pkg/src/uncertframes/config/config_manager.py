from pathlib import Path
from typing import Optional

from uncertframes.config.config_loader import DEFAULT_CONFIG_PATH, ConfigLoader
from uncertframes.config.config_schema import (
    AppConfig,
    ConstructionConfig,
    LoggingConfig,
    MetadataConfig,
    PathsConfig,
    SamplingConfig,
    SearchConfig,
    ToleranceConfig,
)


class ConfigManager:
    """Process-wide access to the validated configuration, loaded once."""

    _instance = None

    def __new__(cls, config_path: Optional[Path] = None):
        if cls._instance is None:
            instance = super().__new__(cls)
            instance.config = ConfigLoader(config_path or DEFAULT_CONFIG_PATH).get_config()
            cls._instance = instance
        return cls._instance

    @property
    def appconfig(self) -> AppConfig:
        return self.config

    @property
    def paths(self) -> PathsConfig:
        return self.config.paths

    @property
    def logging(self) -> LoggingConfig:
        return self.config.logging

    @property
    def tolerances(self) -> ToleranceConfig:
        return self.config.tolerances

    @property
    def sampling(self) -> SamplingConfig:
        return self.config.sampling

    @property
    def constructions(self) -> ConstructionConfig:
        return self.config.constructions

    @property
    def search(self) -> SearchConfig:
        return self.config.search

    @property
    def metadata(self) -> MetadataConfig:
        return self.config.metadata
