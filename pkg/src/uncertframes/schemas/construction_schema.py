# === construction value objects ===

from typing import Dict
from pydantic import BaseModel, ConfigDict, computed_field


class AxiomTally(BaseModel):
    model_config = ConfigDict(frozen=True)

    checked: int
    passed: int

    @computed_field
    @property
    def failed(self) -> int:
        return self.checked - self.passed


class DiscNormAxiomReport(BaseModel):
    """Per-axiom pass counts of a disc norm over sampled (x, y, lambda) triples."""
    model_config = ConfigDict(frozen=True)

    p: float
    dimension: int
    sample_count: int
    seed: int
    axiom_results: Dict[str, AxiomTally]

    @computed_field
    @property
    def failures(self) -> int:
        return sum(tally.failed for tally in self.axiom_results.values())

    @computed_field
    @property
    def all_passed(self) -> bool:
        return self.failures == 0
