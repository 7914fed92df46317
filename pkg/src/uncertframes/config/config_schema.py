"""Pydantic models for config/config.yaml."""

from typing import Dict
from pydantic import BaseModel, Field


class PathsConfig(BaseModel):
    """Configuration for file paths."""
    logs: str
    output: str


class FileHandlerConfig(BaseModel):
    """Configuration for the rotating log file."""
    level: str
    filename: str
    maxBytes: int = Field(gt=0)
    backupCount: int = Field(ge=0)


class LoggingConfig(BaseModel):
    """Configuration for logging."""
    app_name: str
    log_to_console: bool
    level: str
    handlers: Dict[str, FileHandlerConfig]


class ToleranceConfig(BaseModel):
    """Numerical tolerances shared by the verifiers."""
    support_rel_tol: float = Field(ge=0.0)
    support_abs_floor: float = Field(ge=0.0)
    reconstruction_tol: float = Field(gt=0.0)
    bound_slack: float = Field(ge=0.0)
    norm_match_rel_tol: float = Field(gt=0.0)
    garling_rel_tol: float = Field(ge=0.0)


class SamplingConfig(BaseModel):
    """Configuration for randomized checks."""
    default_seed: int
    classify_samples: int = Field(ge=1)
    axiom_samples: int = Field(ge=1)


class ConstructionConfig(BaseModel):
    """Configuration for random frame-pair generation."""
    cond_cap: float = Field(gt=1.0)
    max_retries: int = Field(ge=1)
    max_residual: float = Field(gt=0.0)


class SearchConfig(BaseModel):
    """Configuration for extremal search and minor enumeration."""
    default_budget: int = Field(ge=1)
    max_exhaustive_dim: int = Field(ge=1)
    max_support: int = Field(ge=1)
    generic_retries: int = Field(ge=0)
    minor_enumeration_cap: int = Field(ge=1)
    minor_threshold_scale: float = Field(gt=0.0)
    threads: int = Field(ge=1)


class MetadataConfig(BaseModel):
    """Configuration for metadata."""
    tool_name: str
    version: str
    description: str


class AppConfig(BaseModel):
    """Configuration for the application."""
    paths: PathsConfig
    logging: LoggingConfig
    tolerances: ToleranceConfig
    sampling: SamplingConfig
    constructions: ConstructionConfig
    search: SearchConfig
    metadata: MetadataConfig
