# === command-line run configuration ===

from enum import Enum
from typing import Any, Dict
from pydantic import BaseModel, ConfigDict


class Command(str, Enum):
    VERIFY = "verify"
    GARLING = "garling"
    COUNTEREXAMPLE = "counterexample"
    CONSTRUCT = "construct"
    SEARCH = "search"
    SWEEP = "sweep"
    MINORS = "minors"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    HUMAN = "human"


class RunConfig(BaseModel):
    """One CLI invocation: identical configs with identical seeds give identical JSON."""
    model_config = ConfigDict(frozen=True)

    command: Command
    params: Dict[str, Any]
    seed: int
    output_format: OutputFormat = OutputFormat.JSON
