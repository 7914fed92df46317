"""
Generators for frame pairs and test vectors, and a sampled check of the
disc-norm axioms for the inhomogeneous l^p norm.
"""

import math
from typing import Optional

import numpy as np
from scipy.linalg import dft

from uncertframes.components.frames import FramePair, verify_reconstruction
from uncertframes.components.quasinorm import ExponentLike, quasinorm_rows
from uncertframes.schemas.construction_schema import AxiomTally, DiscNormAxiomReport
from uncertframes.schemas.quasinorm_schema import PExponent
from uncertframes.utils.exceptions import GenerationError, InputError, RegimeError
from uncertframes.utils.logger import CustomLogger

logger = CustomLogger(module_name=__name__).get_logger()

DEFAULT_COND_CAP = 1e6
DEFAULT_MAX_RETRIES = 100
DEFAULT_MAX_RESIDUAL = 1e-9
AXIOM_REL_TOL = 1e-12

# every EDGE_CASE_PERIOD-th sample is a zero x, a cancelling y, or a unimodular lambda
EDGE_CASE_PERIOD = 16


def _require_positive(name: str, value: int) -> None:
    if int(value) != value or value < 1:
        raise InputError(f"{name} must be a positive integer, got {value}")


def identity_pair(d: int) -> FramePair:
    """Canonical basis with its coordinate functionals."""
    _require_positive("d", d)
    eye = np.eye(d, dtype=np.complex128)
    return FramePair(eye, eye, label=f"identity:{d}")


def dft_pair(n: int) -> FramePair:
    """Unitary n-point DFT as analysis, its conjugate transpose as synthesis."""
    _require_positive("n", n)
    matrix = dft(n, scale="sqrtn")
    return FramePair(matrix, matrix.conj().T, label=f"dft:{n}")


def _complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def random_biorthogonal_pair(
    d: int,
    m: Optional[int] = None,
    seed: int = 0,
    cond_cap: float = DEFAULT_COND_CAP,
    max_retries: int = DEFAULT_MAX_RETRIES,
    max_residual: float = DEFAULT_MAX_RESIDUAL,
) -> FramePair:
    """
    Complex Gaussian analysis matrix with its inverse (m = d) or its
    pseudo-inverse (m > d) as synthesis. Deterministic for a fixed seed.
    """
    _require_positive("d", d)
    m = d if m is None else m
    if m < d:
        raise InputError(f"need m >= d, got m={m} < d={d}")
    if not cond_cap > 1.0:
        raise InputError(f"cond_cap must exceed 1, got {cond_cap}")

    rng = np.random.default_rng(seed)
    label = f"random:{d}:{seed}" if m == d else f"random:{d}:{seed}:{m}"

    for attempt in range(1, max_retries + 1):
        analysis = _complex_gaussian(rng, (m, d))
        cond = float(np.linalg.cond(analysis))
        if not math.isfinite(cond) or cond > cond_cap:
            logger.debug(f"{label}: draw {attempt} rejected, condition estimate {cond:.3e}")
            continue

        synthesis = np.linalg.inv(analysis) if m == d else np.linalg.pinv(analysis)
        pair = FramePair(analysis, synthesis, label=label)
        check = verify_reconstruction(pair, tol=max_residual)
        if check.holds:
            return pair
        logger.debug(f"{label}: draw {attempt} rejected, residual {check.max_residual:.3e}")

    logger.error(f"{label}: no draw met cond_cap={cond_cap} in {max_retries} attempts")
    raise GenerationError(
        f"could not draw a pair with condition <= {cond_cap} in {max_retries} attempts"
    )


def dirac_comb(n: int, spacing: int, offset: int = 0) -> np.ndarray:
    """Indicator of {offset, offset + spacing, ...} in Z_n."""
    _require_positive("n", n)
    _require_positive("spacing", spacing)
    if n % spacing != 0:
        raise InputError(f"spacing {spacing} does not divide n={n}")
    if not 0 <= offset < spacing:
        raise InputError(f"offset must lie in [0, {spacing}), got {offset}")

    comb = np.zeros(n, dtype=np.complex128)
    comb[offset::spacing] = 1.0
    return comb


def spike(n: int, index: int = 0) -> np.ndarray:
    _require_positive("n", n)
    if not 0 <= index < n:
        raise InputError(f"spike index must lie in [0, {n}), got {index}")
    return dirac_comb(n, n, index)


def constant(n: int) -> np.ndarray:
    return dirac_comb(n, 1)


def check_disc_norm_axioms(
    p: ExponentLike,
    d: int,
    sample_count: int = 10_000,
    seed: int = 0,
) -> DiscNormAxiomReport:
    """
    Sample (x, y, lambda) triples and test the disc-norm axioms for
    ||x|| = sum |x_k|^p: definiteness, the triangle inequality,
    ||lambda x|| <= |lambda| ||x|| for |lambda| >= 1 and
    ||lambda x|| >= |lambda| ||x|| for |lambda| <= 1.

    Completeness cannot be certified by sampling and is not tested.
    """
    p = PExponent.of(p)
    if not p.is_sub_one:
        raise RegimeError(f"disc-norm axioms are checked for p in (0, 1), got p={p.p}")
    _require_positive("d", d)
    _require_positive("sample_count", sample_count)

    rng = np.random.default_rng(seed)
    x = _complex_gaussian(rng, (sample_count, d))
    y = _complex_gaussian(rng, (sample_count, d))
    magnitude = np.exp(rng.uniform(math.log(0.1), math.log(10.0), sample_count))
    phase = rng.uniform(0.0, 2.0 * math.pi, sample_count)

    slot = np.arange(sample_count) % EDGE_CASE_PERIOD
    x[slot == 0] = 0.0
    cancelling = slot == EDGE_CASE_PERIOD // 2
    y[cancelling] = -x[cancelling]
    unimodular = slot == EDGE_CASE_PERIOD // 4
    magnitude[unimodular] = 1.0

    lam = magnitude * np.exp(1j * phase)

    norm_x = quasinorm_rows(x, p)
    norm_y = quasinorm_rows(y, p)
    norm_sum = quasinorm_rows(x + y, p)
    norm_scaled = quasinorm_rows(lam[:, None] * x, p)
    scaled_bound = magnitude * norm_x

    is_zero = np.all(x == 0, axis=1)
    definiteness = (norm_x == 0) == is_zero
    triangle = norm_sum <= (norm_x + norm_y) * (1.0 + AXIOM_REL_TOL)

    upper_applies = magnitude >= 1.0
    upper = norm_scaled <= scaled_bound * (1.0 + AXIOM_REL_TOL)
    lower_applies = magnitude <= 1.0
    lower = norm_scaled >= scaled_bound * (1.0 - AXIOM_REL_TOL)

    results = {
        "definiteness": AxiomTally(checked=sample_count, passed=int(definiteness.sum())),
        "triangle": AxiomTally(checked=sample_count, passed=int(triangle.sum())),
        "upper_scaling": AxiomTally(
            checked=int(upper_applies.sum()), passed=int((upper & upper_applies).sum())
        ),
        "lower_scaling": AxiomTally(
            checked=int(lower_applies.sum()), passed=int((lower & lower_applies).sum())
        ),
    }
    report = DiscNormAxiomReport(
        p=p.p, dimension=d, sample_count=sample_count, seed=seed, axiom_results=results
    )
    if not report.all_passed:
        logger.warning(f"Disc-norm axiom failures at p={p.p}, d={d}: {report.failures}")
    return report
