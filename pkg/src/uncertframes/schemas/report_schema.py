# === uncertainty report value objects ===

from enum import Enum
from typing import List, Optional, Tuple
from pydantic import BaseModel, ConfigDict


class TheoremId(str, Enum):
    RT = "RT"
    MT = "MT"
    UUP = "UUP"
    DISCUP = "DISCUP"
    FI = "FI"
    SI = "SI"


class InequalityCheck(BaseModel):
    """A single lhs >= bound comparison."""
    model_config = ConfigDict(frozen=True)

    label: str
    lhs: float
    bound: float
    holds: bool
    slack_ratio: float


class UncertaintyReport(BaseModel):
    """
    Result of checking one theorem on one vector.

    lhs/bound/holds/slack_ratio describe the tightest check; `checks` lists
    every inequality the theorem asserts.
    """
    model_config = ConfigDict(frozen=True)

    theorem_id: TheoremId
    lhs: float
    bound: float
    holds: bool
    slack_ratio: float
    supports: Tuple[int, int]
    p: Optional[float] = None
    checks: List[InequalityCheck]
    pair_labels: Tuple[str, str] = ("", "")


class RTChainReport(BaseModel):
    """(a^2+b^2)/2 >= ((a+b)/2)^2 >= ab >= 1/coherence^2 for support counts a, b."""
    model_config = ConfigDict(frozen=True)

    theorem_id: TheoremId = TheoremId.RT
    am: float
    sq_mean: float
    product: float
    bound: float
    coherence: float
    supports: Tuple[int, int]
    links: Tuple[bool, bool, bool]
    all_hold: bool
    pair_labels: Tuple[str, str] = ("", "")
