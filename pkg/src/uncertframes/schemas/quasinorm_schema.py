# === quasinorm value objects ===

import math
from enum import Enum
from typing import Union
from pydantic import BaseModel, ConfigDict, Field, computed_field, field_validator


class Regime(str, Enum):
    """Which side of 1 an exponent p falls on."""
    SUB_ONE = "sub_one"
    ONE = "one"
    SUPER_ONE = "super_one"
    INFINITY = "infinity"


class PExponent(BaseModel):
    """Exponent p in (0, inf]. The regime is fixed at construction."""
    model_config = ConfigDict(frozen=True)

    p: float

    @field_validator("p")
    @classmethod
    def _positive(cls, value: float) -> float:
        if math.isnan(value) or value <= 0:
            raise ValueError(f"exponent must satisfy p > 0, got {value}")
        return float(value)

    @classmethod
    def of(cls, value: Union["PExponent", float, int, str]) -> "PExponent":
        """Coerce a float, int, 'inf' string or an existing PExponent."""
        if isinstance(value, PExponent):
            return value
        return cls(p=float(value))

    @property
    def regime(self) -> Regime:
        if math.isinf(self.p):
            return Regime.INFINITY
        if self.p < 1.0:
            return Regime.SUB_ONE
        if self.p == 1.0:
            return Regime.ONE
        return Regime.SUPER_ONE

    @property
    def is_sub_one(self) -> bool:
        return self.regime is Regime.SUB_ONE

    def conjugate(self) -> float:
        """Conjugate index q with 1/p + 1/q = 1 (only defined for p >= 1)."""
        # Imported here: exceptions live in utils, schemas stay import-light.
        from uncertframes.utils.exceptions import RegimeError

        regime = self.regime
        if regime is Regime.SUB_ONE:
            raise RegimeError(f"conjugate index is undefined for p={self.p} < 1")
        if regime is Regime.ONE:
            return math.inf
        if regime is Regime.INFINITY:
            return 1.0
        return self.p / (self.p - 1.0)

    def __float__(self) -> float:
        return self.p


class SupportPolicy(BaseModel):
    """
    Tolerance rule turning floating-point coefficients into exact support counts.

    An entry a is nonzero iff |a| > max(abs_floor, rel_tol * max_k |a_k|).
    """
    model_config = ConfigDict(frozen=True)

    rel_tol: float = Field(default=1e-10, ge=0.0)
    abs_floor: float = Field(default=1e-14, ge=0.0)

    @classmethod
    def exact(cls) -> "SupportPolicy":
        return cls(rel_tol=0.0, abs_floor=0.0)

    @classmethod
    def default(cls) -> "SupportPolicy":
        return cls()

    def threshold(self, max_abs: float) -> float:
        return max(self.abs_floor, self.rel_tol * max_abs)


class GarlingResult(BaseModel):
    """Outcome of (sum |a_n|)^p <= sum |a_n|^p on one sequence."""
    model_config = ConfigDict(frozen=True)

    p: float
    length: int
    lhs: float
    rhs: float
    holds: bool
    equality: bool


class ContinuousGarlingWitness(BaseModel):
    """Constant function c on a set of measure m where the continuous inequality fails."""
    model_config = ConfigDict(frozen=True)

    p: float
    measure_of_set: float
    constant_value: float
    lhs: float
    rhs: float

    @computed_field
    @property
    def is_witness(self) -> bool:
        return self.lhs > self.rhs


class SubadditivityResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    p: float
    lhs: float
    rhs: float
    holds: bool
