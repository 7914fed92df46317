# === search value objects ===

from enum import Enum
from typing import List, Optional, Tuple
from pydantic import BaseModel, ConfigDict, model_validator


class SearchStrategy(str, Enum):
    COMBS = "combs"
    EXHAUSTIVE_SUPPORTS = "exhaustive_supports"
    RANDOM_RESTARTS = "random_restarts"


class SearchOutcome(BaseModel):
    """
    Smallest support product found by one search.

    `minimizer` is stored as [re, im] pairs. `bound` is the largest verified
    bound applicable to the pairs (`bound_kind` names it); `tight` means the
    minimizer attains it.
    """
    model_config = ConfigDict(frozen=True)

    strategy: SearchStrategy
    minimizer: List[Tuple[float, float]]
    supports: Tuple[int, int]
    min_product: int
    bound: float
    bound_kind: str
    uup_bound: float
    rt_bound: Optional[float] = None
    tight: bool
    candidates_examined: int
    pair_labels: Tuple[str, str] = ("", "")


class MinorReport(BaseModel):
    """Square-minor scan of the n-point DFT matrix."""
    model_config = ConfigDict(frozen=True)

    n: int
    max_size_checked: int
    singular_minor_found: bool
    witness: Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]] = None
    min_abs_det_seen: float
    minors_examined: int
    singular_count: int
    sampled: bool

    @model_validator(mode="after")
    def _witness_iff_singular(self) -> "MinorReport":
        if (self.witness is not None) != self.singular_minor_found:
            raise ValueError("witness must be present exactly when a singular minor is found")
        return self
