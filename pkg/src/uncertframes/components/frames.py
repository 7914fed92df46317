"""
Frame pairs on K^d.

A pair stores the analysis functionals f_n as the rows of an m x d matrix
and the synthesis vectors tau_n as the columns of a d x m matrix. The
index set is {0, ..., m-1} with counting measure, so the measure of the
support of theta_f x is a support count.
"""

from typing import Iterable, Optional

import numpy as np

from uncertframes.components.quasinorm import (
    ArrayLike,
    ExponentLike,
    as_coeff_seq,
    quasinorm_rows,
)
from uncertframes.schemas.frame_schema import (
    CoherencePair,
    FrameClassification,
    ReconstructionResult,
    ReferenceNorm,
)
from uncertframes.schemas.quasinorm_schema import PExponent, Regime
from uncertframes.utils.exceptions import InputError
from uncertframes.utils.logger import CustomLogger

logger = CustomLogger(module_name=__name__).get_logger()

DEFAULT_RECONSTRUCTION_TOL = 1e-9
DEFAULT_NORM_MATCH_REL_TOL = 1e-9


class FramePair:
    """
    Analysis functionals (matrix rows) paired with synthesis vectors (matrix columns).

    The matrices are copied and frozen; the pair is immutable after construction.
    Reconstruction (synthesis @ analysis == I_d) is not enforced here, use
    `verify_reconstruction`.
    """

    def __init__(
        self,
        analysis: ArrayLike,
        synthesis: ArrayLike,
        label: str = "",
    ) -> None:
        try:
            analysis = np.array(analysis, dtype=np.complex128, copy=True)
            synthesis = np.array(synthesis, dtype=np.complex128, copy=True)
        except (TypeError, ValueError) as e:
            raise InputError(f"frame matrices are not numeric: {e}") from e

        if analysis.ndim != 2 or synthesis.ndim != 2:
            raise InputError("analysis and synthesis must be two-dimensional matrices")

        count, ambient_dim = analysis.shape
        if synthesis.shape != (ambient_dim, count):
            raise InputError(
                f"synthesis shape {synthesis.shape} does not match analysis shape "
                f"{analysis.shape}; expected {(ambient_dim, count)}"
            )
        if ambient_dim < 1:
            raise InputError("ambient dimension must be at least 1")
        if count < ambient_dim:
            raise InputError(f"need at least d={ambient_dim} functionals, got m={count}")
        if not (np.all(np.isfinite(analysis)) and np.all(np.isfinite(synthesis))):
            raise InputError("frame matrices contain non-finite entries")

        analysis.setflags(write=False)
        synthesis.setflags(write=False)
        self._analysis = analysis
        self._synthesis = synthesis
        self.label = label

    @classmethod
    def from_vectors(cls, vectors: ArrayLike, label: str = "") -> "FramePair":
        """Pair whose functionals are <., tau_n> for the given synthesis columns."""
        synthesis = np.asarray(vectors, dtype=np.complex128)
        return cls(synthesis.conj().T, synthesis, label=label)

    @property
    def analysis(self) -> np.ndarray:
        return self._analysis

    @property
    def synthesis(self) -> np.ndarray:
        return self._synthesis

    @property
    def ambient_dim(self) -> int:
        return self._analysis.shape[1]

    @property
    def count(self) -> int:
        return self._analysis.shape[0]

    def __repr__(self) -> str:
        name = self.label or "unlabeled"
        return f"FramePair({name}, d={self.ambient_dim}, m={self.count})"


def _check_vector(x: ArrayLike, length: int, what: str) -> np.ndarray:
    arr = as_coeff_seq(x)
    if arr.size != length:
        raise InputError(f"{what} has length {arr.size}, expected {length}")
    return arr


def analyze(pair: FramePair, x: ArrayLike) -> np.ndarray:
    """theta_f x = (f_n(x))_n."""
    return pair.analysis @ _check_vector(x, pair.ambient_dim, "vector")


def synthesize(pair: FramePair, coeffs: ArrayLike) -> np.ndarray:
    """sum_n c_n tau_n."""
    return pair.synthesis @ _check_vector(coeffs, pair.count, "coefficient sequence")


def reconstruction_tolerance(pair: FramePair, base: float = DEFAULT_RECONSTRUCTION_TOL) -> float:
    """Base tolerance scaled by the condition estimate of the analysis matrix."""
    cond = float(np.linalg.cond(pair.analysis))
    if not np.isfinite(cond):
        return base
    return base * max(1.0, cond)


def verify_reconstruction(pair: FramePair, tol: Optional[float] = None) -> ReconstructionResult:
    """max |synthesis @ analysis - I_d| against tol."""
    if tol is None:
        tol = reconstruction_tolerance(pair)
    residual = pair.synthesis @ pair.analysis - np.eye(pair.ambient_dim)
    max_residual = float(np.abs(residual).max())
    return ReconstructionResult(max_residual=max_residual, tol=tol, holds=max_residual <= tol)


def frame_operator(pair: FramePair) -> np.ndarray:
    """sum_n tau_n tau_n^*."""
    return pair.synthesis @ pair.synthesis.conj().T


def is_parseval(pair: FramePair, tol: float = DEFAULT_RECONSTRUCTION_TOL) -> bool:
    deviation = frame_operator(pair) - np.eye(pair.ambient_dim)
    return bool(np.abs(deviation).max() <= tol)


def reference_norm_rows(
    vectors: np.ndarray,
    p: ExponentLike,
    reference: ReferenceNorm,
) -> np.ndarray:
    """
    Reference norm of each row, raised the way p_quasinorm is for the same p.

    EUCLIDEAN is homogeneous, so it is raised to p when p is in (0, 1].
    LP is the l^p quantity itself.
    """
    p = PExponent.of(p)
    if reference is ReferenceNorm.LP:
        return quasinorm_rows(vectors, p)

    norms = np.linalg.norm(vectors, axis=-1)
    if p.regime in (Regime.SUB_ONE, Regime.ONE):
        return norms ** p.p
    return norms


def _sample_vectors(count: int, dim: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return (rng.standard_normal((count, dim)) + 1j * rng.standard_normal((count, dim))) / np.sqrt(2.0)


def norm_matches(
    pair: FramePair,
    p: ExponentLike,
    reference: ReferenceNorm = ReferenceNorm.EUCLIDEAN,
    sample_count: int = 64,
    seed: int = 0,
    rel_tol: float = DEFAULT_NORM_MATCH_REL_TOL,
) -> bool:
    """Whether p_quasinorm(theta_f x, p) reproduces the reference norm on sampled x."""
    samples = _sample_vectors(sample_count, pair.ambient_dim, seed)
    coeffs = samples @ pair.analysis.T
    lhs = quasinorm_rows(coeffs, p)
    target = reference_norm_rows(samples, p, reference)
    scale = np.maximum(np.abs(target), np.finfo(float).tiny)
    return bool(np.all(np.abs(lhs - target) <= rel_tol * scale))


def classify(
    pair: FramePair,
    p_list: Iterable[ExponentLike],
    sample_count: int = 64,
    seed: int = 0,
    reference: ReferenceNorm = ReferenceNorm.EUCLIDEAN,
    tol: Optional[float] = None,
    rel_tol: float = DEFAULT_NORM_MATCH_REL_TOL,
) -> FrameClassification:
    """
    Classify a pair against the frame definitions.

    Conditions about measurability and weak integrals are vacuous over a
    finite index set and are not checked.
    """
    exponents = [PExponent.of(p) for p in p_list]
    if not exponents:
        raise InputError("classify needs at least one exponent")
    if sample_count < 1:
        raise InputError(f"sample_count must be positive, got {sample_count}")

    reconstructs = verify_reconstruction(pair, tol).holds
    parseval = is_parseval(pair, tol if tol is not None else DEFAULT_RECONSTRUCTION_TOL)

    p_norm_exact = {
        p.p: norm_matches(pair, p, reference, sample_count, seed, rel_tol)
        for p in exponents
    }
    p_schauder = {p: reconstructs and exact for p, exact in p_norm_exact.items()}

    logger.debug(
        f"Classified {pair!r}: reconstructs={reconstructs}, parseval={parseval}, "
        f"p_norm_exact={p_norm_exact} ({reference.value} reference)"
    )

    return FrameClassification(
        reconstructs=reconstructs,
        parseval=parseval,
        semi_schauder=reconstructs,
        p_norm_exact=p_norm_exact,
        p_schauder=p_schauder,
        reference=reference,
        sample_count=sample_count,
        seed=seed,
    )


def _check_same_space(first: FramePair, second: FramePair) -> None:
    if first.ambient_dim != second.ambient_dim:
        raise InputError(
            f"pairs live in different dimensions: {first.ambient_dim} vs {second.ambient_dim}"
        )


def cross_coherence(fg: FramePair, gw: FramePair) -> CoherencePair:
    """max |f_n(omega_m)| and max |g_m(tau_n)|."""
    _check_same_space(fg, gw)
    c_f_omega = float(np.abs(fg.analysis @ gw.synthesis).max())
    c_g_tau = float(np.abs(gw.analysis @ fg.synthesis).max())
    return CoherencePair(c_f_omega=c_f_omega, c_g_tau=c_g_tau)


def rt_coherence(tau_pair: FramePair, omega_pair: FramePair) -> float:
    """max |<tau_j, omega_k>| over the synthesis vectors of two pairs."""
    _check_same_space(tau_pair, omega_pair)
    return float(np.abs(tau_pair.synthesis.conj().T @ omega_pair.synthesis).max())
