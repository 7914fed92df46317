# === frame value objects ===

from enum import Enum
from typing import Dict
from pydantic import BaseModel, ConfigDict, Field


class ReferenceNorm(str, Enum):
    """Ambient norm the analysis coefficients are compared against."""
    EUCLIDEAN = "euclidean"
    LP = "lp"


class ReconstructionResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    max_residual: float
    tol: float
    holds: bool


class CoherencePair(BaseModel):
    """c_f_omega = max |f_n(omega_m)| and c_g_tau = max |g_m(tau_n)|."""
    model_config = ConfigDict(frozen=True)

    c_f_omega: float = Field(ge=0.0)
    c_g_tau: float = Field(ge=0.0)

    @property
    def product(self) -> float:
        return self.c_f_omega * self.c_g_tau

    @property
    def degenerate(self) -> bool:
        return self.c_f_omega == 0.0 or self.c_g_tau == 0.0


class FrameClassification(BaseModel):
    """
    Which frame definitions a pair satisfies.

    semi_schauder: reconstruction with a well-defined analysis map (at finite
        dimension the analysis is defined on the whole space).
    p_norm_exact: per tested p, whether the analysis reproduces the
        reference norm on every sampled vector.
    p_schauder: reconstruction and norm equality together.
    """
    model_config = ConfigDict(frozen=True)

    reconstructs: bool
    parseval: bool
    semi_schauder: bool
    p_norm_exact: Dict[float, bool]
    p_schauder: Dict[float, bool]
    reference: ReferenceNorm
    sample_count: int
    seed: int
