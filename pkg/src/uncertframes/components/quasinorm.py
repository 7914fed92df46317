"""
Scalar and sequence core: p-quasi-norms, support counts, the Garling
inequality and the witness showing its continuous analogue fails.

Sequences are complex128 numpy vectors (real input embeds with zero
imaginary part). For p in (0, 1] the quasi-norm is the inhomogeneous sum
sum |a_n|^p without the 1/p-th root.
"""

import math
from typing import Optional, Sequence, Union

import numpy as np

from uncertframes.schemas.quasinorm_schema import (
    ContinuousGarlingWitness,
    GarlingResult,
    PExponent,
    Regime,
    SubadditivityResult,
    SupportPolicy,
)
from uncertframes.utils.exceptions import InputError, RegimeError

ArrayLike = Union[np.ndarray, Sequence[complex]]
ExponentLike = Union[PExponent, float, int, str]

DEFAULT_GARLING_REL_TOL = 1e-12


def as_coeff_seq(a: ArrayLike) -> np.ndarray:
    """Validate and convert to a finite, non-empty complex vector."""
    try:
        arr = np.asarray(a, dtype=np.complex128)
    except (TypeError, ValueError) as e:
        raise InputError(f"coefficients are not numeric: {e}") from e

    if arr.ndim == 0:
        arr = arr.reshape(1)
    if arr.ndim != 1:
        raise InputError(f"coefficient sequence must be one-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise InputError("coefficient sequence must have length >= 1")
    if not np.all(np.isfinite(arr)):
        raise InputError("coefficient sequence contains a non-finite entry")
    return arr


def abs_pow(magnitudes: np.ndarray, p: float) -> np.ndarray:
    """|a|^p as exp(p ln|a|), with |a| = 0 mapped to 0."""
    magnitudes = np.asarray(magnitudes, dtype=float)
    out = np.zeros_like(magnitudes)
    nonzero = magnitudes > 0
    out[nonzero] = np.exp(p * np.log(magnitudes[nonzero]))
    return out


def _scalar_pow(value: float, p: float) -> float:
    if value == 0.0:
        return 0.0
    return math.exp(p * math.log(value))


def quasinorm_rows(values: np.ndarray, p: ExponentLike) -> np.ndarray:
    """
    p_quasinorm applied along the last axis.

    No validation beyond the exponent; used by the vectorized samplers.
    """
    p = PExponent.of(p)
    mags = np.abs(np.asarray(values))
    regime = p.regime

    if regime is Regime.INFINITY:
        return mags.max(axis=-1)
    if regime is Regime.ONE:
        return mags.sum(axis=-1)
    if regime is Regime.SUB_ONE:
        return abs_pow(mags, p.p).sum(axis=-1)

    # (1, inf): scale by the largest entry before taking powers
    scale = mags.max(axis=-1, keepdims=True)
    safe = np.where(scale > 0, scale, 1.0)
    inner = abs_pow(mags / safe, p.p).sum(axis=-1)
    return np.squeeze(safe, axis=-1) * inner ** (1.0 / p.p)


def p_quasinorm(a: ArrayLike, p: ExponentLike) -> float:
    """
    sum |a_n|^p for p in (0, 1]; (sum |a_n|^p)^(1/p) for p in (1, inf);
    max |a_n| for p = inf.
    """
    arr = as_coeff_seq(a)
    return float(quasinorm_rows(arr, p))


def support_mask(a: ArrayLike, policy: Optional[SupportPolicy] = None) -> np.ndarray:
    arr = as_coeff_seq(a)
    policy = policy or SupportPolicy.default()
    mags = np.abs(arr)
    return mags > policy.threshold(float(mags.max()))


def support(a: ArrayLike, policy: Optional[SupportPolicy] = None) -> tuple:
    """Indices classified nonzero under the policy."""
    return tuple(int(i) for i in np.flatnonzero(support_mask(a, policy)))


def support_count(a: ArrayLike, policy: Optional[SupportPolicy] = None) -> int:
    """Number of entries classified nonzero: the finite ||.||_0."""
    return int(np.count_nonzero(support_mask(a, policy)))


def garling_check(
    a: ArrayLike,
    p: ExponentLike,
    rel_tol: float = DEFAULT_GARLING_REL_TOL,
) -> GarlingResult:
    """
    Check (sum |a_n|)^p <= sum |a_n|^p for p in (0, 1).

    `equality` needs both sides to agree within rel_tol and at most one
    exactly nonzero entry, so (1, 1e-20) is not an equality case even though
    the two sides round to the same float.
    """
    p = PExponent.of(p)
    if not p.is_sub_one:
        raise RegimeError(f"Garling inequality needs p in (0, 1), got p={p.p}")

    mags = np.abs(as_coeff_seq(a))
    lhs = _scalar_pow(float(mags.sum()), p.p)
    rhs = float(abs_pow(mags, p.p).sum())
    tol = rel_tol * rhs

    return GarlingResult(
        p=p.p,
        length=int(mags.size),
        lhs=lhs,
        rhs=rhs,
        holds=lhs <= rhs + tol,
        equality=abs(lhs - rhs) <= tol and support_count(mags, SupportPolicy.exact()) <= 1,
    )


def continuous_garling_counterexample(
    p: ExponentLike,
    measure: float = 0.5,
    value: float = 1.0,
) -> ContinuousGarlingWitness:
    """
    Constant function c on a set of measure m < 1: (c m)^p > c^p m.

    m = 1 gives equality and is rejected along with m <= 0.
    """
    p = PExponent.of(p)
    if not p.is_sub_one:
        raise RegimeError(f"counterexample needs p in (0, 1), got p={p.p}")
    if not 0.0 < measure < 1.0:
        raise InputError(f"set measure must lie in (0, 1), got {measure}")
    if not (value > 0.0 and math.isfinite(value)):
        raise InputError(f"constant value must be positive and finite, got {value}")

    lhs = math.pow(value * measure, p.p)
    rhs = math.pow(value, p.p) * measure

    return ContinuousGarlingWitness(
        p=p.p,
        measure_of_set=measure,
        constant_value=value,
        lhs=lhs,
        rhs=rhs,
    )


def p_subadditivity_check(a: ArrayLike, b: ArrayLike, p: ExponentLike) -> SubadditivityResult:
    """||a + b||_p <= ||a||_p + ||b||_p for p in (0, 1]."""
    p = PExponent.of(p)
    if p.regime not in (Regime.SUB_ONE, Regime.ONE):
        raise RegimeError(f"subadditivity check is for p in (0, 1], got p={p.p}")

    a = as_coeff_seq(a)
    b = as_coeff_seq(b)
    if a.shape != b.shape:
        raise InputError(f"length mismatch: {a.size} vs {b.size}")

    lhs = p_quasinorm(a + b, p)
    rhs = p_quasinorm(a, p) + p_quasinorm(b, p)
    return SubadditivityResult(
        p=p.p,
        lhs=lhs,
        rhs=rhs,
        holds=lhs <= rhs * (1.0 + DEFAULT_GARLING_REL_TOL),
    )
