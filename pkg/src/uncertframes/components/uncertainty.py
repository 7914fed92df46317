"""
Verifiers for the uncertainty inequalities.

Every verifier returns a report value object; a report with holds=False
means a theorem was falsified on that input or a tolerance is wrong, and
is logged as a warning.
"""

import math
from typing import List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from uncertframes.components.frames import (
    FramePair,
    analyze,
    cross_coherence,
    is_parseval,
    norm_matches,
    rt_coherence,
    verify_reconstruction,
)
from uncertframes.components.quasinorm import (
    ArrayLike,
    ExponentLike,
    as_coeff_seq,
    p_quasinorm,
    support_count,
)
from uncertframes.schemas.frame_schema import CoherencePair, ReferenceNorm
from uncertframes.schemas.quasinorm_schema import PExponent, Regime, SupportPolicy
from uncertframes.schemas.report_schema import (
    InequalityCheck,
    RTChainReport,
    TheoremId,
    UncertaintyReport,
)
from uncertframes.utils.exceptions import (
    ClassificationError,
    DegenerateBoundError,
    ExcludedInputError,
    InputError,
    RegimeError,
)
from uncertframes.utils.logger import CustomLogger

logger = CustomLogger(module_name=__name__).get_logger()

DEFAULT_BOUND_SLACK = 1e-12
DEFAULT_MT_SAMPLES = 64


# === inequality bookkeeping ===

def slack_ratio(lhs: float, bound: float) -> float:
    return lhs / bound if bound > 0 else math.inf


def bound_holds(lhs: float, bound: float, slack: float = DEFAULT_BOUND_SLACK) -> bool:
    """lhs >= bound - slack * max(1, |bound|)."""
    return lhs >= bound - slack * max(1.0, abs(bound))


def _check(label: str, lhs: float, bound: float, slack: float) -> InequalityCheck:
    return InequalityCheck(
        label=label,
        lhs=float(lhs),
        bound=float(bound),
        holds=bound_holds(lhs, bound, slack),
        slack_ratio=slack_ratio(lhs, bound),
    )


def _report(
    theorem_id: TheoremId,
    checks: List[InequalityCheck],
    supports: Tuple[int, int],
    p: Optional[PExponent],
    pairs: Tuple[FramePair, FramePair],
) -> UncertaintyReport:
    failing = [check for check in checks if not check.holds]
    headline = failing[0] if failing else min(checks, key=lambda check: check.slack_ratio)

    report = UncertaintyReport(
        theorem_id=theorem_id,
        lhs=headline.lhs,
        bound=headline.bound,
        holds=not failing,
        slack_ratio=headline.slack_ratio,
        supports=supports,
        p=None if p is None else p.p,
        checks=checks,
        pair_labels=(pairs[0].label, pairs[1].label),
    )
    if failing:
        logger.warning(
            f"{theorem_id.value} violated for pairs {report.pair_labels} at p={report.p}: "
            f"{[check.label for check in failing]}"
        )
    return report


# === shared preconditions ===

def _nonzero_vector(x: ArrayLike, dim: int) -> np.ndarray:
    x = as_coeff_seq(x)
    if x.size != dim:
        raise InputError(f"vector has length {x.size}, expected {dim}")
    if not np.any(x):
        raise ExcludedInputError("the zero vector is excluded from every uncertainty principle")
    return x


def _require_reconstruction(*pairs: FramePair) -> None:
    for pair in pairs:
        check = verify_reconstruction(pair)
        if not check.holds:
            raise ClassificationError(
                f"{pair!r} does not reconstruct (residual {check.max_residual:.3e} > {check.tol:.3e})"
            )


def _coherence(f_pair: FramePair, g_pair: FramePair) -> CoherencePair:
    coherence = cross_coherence(f_pair, g_pair)
    if coherence.degenerate:
        raise DegenerateBoundError(
            f"zero cross-coherence between {f_pair!r} and {g_pair!r}: "
            "one analysis annihilates every synthesis vector of the other"
        )
    return coherence


def _sub_one(p: ExponentLike, what: str) -> PExponent:
    p = PExponent.of(p)
    if not p.is_sub_one:
        raise RegimeError(f"{what} needs p in (0, 1), got p={p.p}")
    return p


class _Analyses:
    """theta_f x, theta_g x and their supports for one vector."""

    def __init__(self, f_pair: FramePair, g_pair: FramePair, x: ArrayLike, policy: Optional[SupportPolicy]):
        if f_pair.ambient_dim != g_pair.ambient_dim:
            raise InputError(
                f"pairs live in different dimensions: {f_pair.ambient_dim} vs {g_pair.ambient_dim}"
            )
        x = _nonzero_vector(x, f_pair.ambient_dim)
        _require_reconstruction(f_pair, g_pair)

        policy = policy or SupportPolicy.default()
        self.theta_f = analyze(f_pair, x)
        self.theta_g = analyze(g_pair, x)
        self.supports = (support_count(self.theta_f, policy), support_count(self.theta_g, policy))


# === main inequality and its two proof steps ===

def discup_bound(coherence: CoherencePair, p: ExponentLike) -> float:
    """1 / (c_f_omega^p c_g_tau^p)."""
    return math.pow(coherence.product, -PExponent.of(p).p)


def verify_discup(
    f_pair: FramePair,
    g_pair: FramePair,
    x: ArrayLike,
    p: ExponentLike,
    policy: Optional[SupportPolicy] = None,
    slack: float = DEFAULT_BOUND_SLACK,
) -> UncertaintyReport:
    """||theta_f x||_0 ||theta_g x||_0 >= 1 / (c_f_omega c_g_tau)^p for p in (0, 1)."""
    p = _sub_one(p, "the disc uncertainty principle")
    analyses = _Analyses(f_pair, g_pair, x, policy)
    coherence = _coherence(f_pair, g_pair)

    s_f, s_g = analyses.supports
    checks = [_check("support product", s_f * s_g, discup_bound(coherence, p), slack)]
    return _report(TheoremId.DISCUP, checks, analyses.supports, p, (f_pair, g_pair))


def verify_fi(
    f_pair: FramePair,
    g_pair: FramePair,
    x: ArrayLike,
    p: ExponentLike,
    policy: Optional[SupportPolicy] = None,
    slack: float = DEFAULT_BOUND_SLACK,
) -> UncertaintyReport:
    """||theta_f x||_0 ||theta_g x|| >= ||theta_f x|| / c_f_omega^p."""
    p = _sub_one(p, "the first proof inequality")
    analyses = _Analyses(f_pair, g_pair, x, policy)
    coherence = _coherence(f_pair, g_pair)

    lhs = analyses.supports[0] * p_quasinorm(analyses.theta_g, p)
    bound = p_quasinorm(analyses.theta_f, p) / math.pow(coherence.c_f_omega, p.p)
    checks = [_check("f-support times g-norm", lhs, bound, slack)]
    return _report(TheoremId.FI, checks, analyses.supports, p, (f_pair, g_pair))


def verify_si(
    f_pair: FramePair,
    g_pair: FramePair,
    x: ArrayLike,
    p: ExponentLike,
    policy: Optional[SupportPolicy] = None,
    slack: float = DEFAULT_BOUND_SLACK,
) -> UncertaintyReport:
    """||theta_g x||_0 ||theta_f x|| >= ||theta_g x|| / c_g_tau^p."""
    p = _sub_one(p, "the second proof inequality")
    analyses = _Analyses(f_pair, g_pair, x, policy)
    coherence = _coherence(f_pair, g_pair)

    lhs = analyses.supports[1] * p_quasinorm(analyses.theta_f, p)
    bound = p_quasinorm(analyses.theta_g, p) / math.pow(coherence.c_g_tau, p.p)
    checks = [_check("g-support times f-norm", lhs, bound, slack)]
    return _report(TheoremId.SI, checks, analyses.supports, p, (f_pair, g_pair))


# === Hilbert-space chain ===

def verify_rt_chain(
    tau_pair: FramePair,
    omega_pair: FramePair,
    h: ArrayLike,
    policy: Optional[SupportPolicy] = None,
    tol: float = 1e-9,
    slack: float = DEFAULT_BOUND_SLACK,
) -> RTChainReport:
    """
    (a^2 + b^2)/2 >= ((a + b)/2)^2 >= ab >= 1 / max|<tau_j, omega_k>|^2
    with a, b the supports of (<h, tau_j>)_j and (<h, omega_k>)_k.
    """
    if tau_pair.ambient_dim != omega_pair.ambient_dim:
        raise InputError(
            f"pairs live in different dimensions: {tau_pair.ambient_dim} vs {omega_pair.ambient_dim}"
        )
    h = _nonzero_vector(h, tau_pair.ambient_dim)
    for pair in (tau_pair, omega_pair):
        if not is_parseval(pair, tol):
            raise ClassificationError(f"{pair!r} is not a Parseval frame")

    coherence = rt_coherence(tau_pair, omega_pair)
    if coherence == 0.0:
        raise DegenerateBoundError("the two Parseval frames are mutually orthogonal")

    policy = policy or SupportPolicy.default()
    a = support_count(tau_pair.synthesis.conj().T @ h, policy)
    b = support_count(omega_pair.synthesis.conj().T @ h, policy)

    am = (a * a + b * b) / 2.0
    sq_mean = ((a + b) / 2.0) ** 2
    product = float(a * b)
    bound = 1.0 / coherence ** 2
    links = (am >= sq_mean, sq_mean >= product, bound_holds(product, bound, slack))

    report = RTChainReport(
        am=am,
        sq_mean=sq_mean,
        product=product,
        bound=bound,
        coherence=coherence,
        supports=(a, b),
        links=links,
        all_hold=all(links),
        pair_labels=(tau_pair.label, omega_pair.label),
    )
    if not report.all_hold:
        logger.warning(f"RT chain broken for {report.pair_labels}: links={links}")
    return report


# === Banach-space principles for p >= 1 ===

def verify_mt(
    f_pair: FramePair,
    g_pair: FramePair,
    x: ArrayLike,
    p: ExponentLike,
    policy: Optional[SupportPolicy] = None,
    reference: ReferenceNorm = ReferenceNorm.EUCLIDEAN,
    sample_count: int = DEFAULT_MT_SAMPLES,
    seed: int = 0,
    slack: float = DEFAULT_BOUND_SLACK,
) -> UncertaintyReport:
    """
    Support inequalities for p-Schauder frames with p >= 1.

    p > 1:   s_f^(1/p) s_g^(1/q) >= 1/c_f_omega  and  s_g^(1/p) s_f^(1/q) >= 1/c_g_tau
    p = 1:   s_f >= 1/c_f_omega  and  s_g >= 1/c_g_tau
    p = inf: s_g >= 1/c_f_omega  and  s_f >= 1/c_g_tau

    At p = inf the supports and coherences are paired crosswise
    relative to p = 1.
    """
    p = PExponent.of(p)
    if p.is_sub_one:
        raise RegimeError(f"p-Schauder support inequalities need p >= 1, got p={p.p}")

    analyses = _Analyses(f_pair, g_pair, x, policy)
    for pair in (f_pair, g_pair):
        if not norm_matches(pair, p, reference, sample_count, seed):
            raise ClassificationError(
                f"pair {pair.label or pair!r} is not a p-Schauder frame for this p "
                f"(p={p.p}, {reference.value} reference)"
            )
    coherence = _coherence(f_pair, g_pair)

    s_f, s_g = analyses.supports
    bound_f = 1.0 / coherence.c_f_omega
    bound_g = 1.0 / coherence.c_g_tau

    if p.regime is Regime.SUPER_ONE:
        inv_p = 1.0 / p.p
        inv_q = 1.0 / p.conjugate()
        checks = [
            _check("c_f_omega", s_f ** inv_p * s_g ** inv_q, bound_f, slack),
            _check("c_g_tau", s_g ** inv_p * s_f ** inv_q, bound_g, slack),
        ]
    elif p.regime is Regime.ONE:
        checks = [
            _check("c_f_omega", s_f, bound_f, slack),
            _check("c_g_tau", s_g, bound_g, slack),
        ]
    else:
        checks = [
            _check("c_f_omega", s_g, bound_f, slack),
            _check("c_g_tau", s_f, bound_g, slack),
        ]
    return _report(TheoremId.MT, checks, analyses.supports, p, (f_pair, g_pair))


def verify_uup(
    f_pair: FramePair,
    g_pair: FramePair,
    x: ArrayLike,
    p: ExponentLike,
    policy: Optional[SupportPolicy] = None,
    slack: float = DEFAULT_BOUND_SLACK,
) -> UncertaintyReport:
    """s_f s_g >= 1 / (c_f_omega c_g_tau) for unbounded frames, p in {1, inf}."""
    p = PExponent.of(p)
    if p.regime not in (Regime.ONE, Regime.INFINITY):
        raise RegimeError(f"the unbounded principle is stated for p = 1 or p = inf, got p={p.p}")

    analyses = _Analyses(f_pair, g_pair, x, policy)
    coherence = _coherence(f_pair, g_pair)

    s_f, s_g = analyses.supports
    checks = [_check("support product", s_f * s_g, 1.0 / coherence.product, slack)]
    return _report(TheoremId.UUP, checks, analyses.supports, p, (f_pair, g_pair))


# === bound comparison ===

def compare_bounds(
    f_pair: FramePair,
    g_pair: FramePair,
    p_grid: Sequence[ExponentLike],
) -> pd.DataFrame:
    """
    Tabulate 1/(c1 c2)^p against 1/(c1 c2) and the Hilbert-space bound
    1/max|<tau_j, omega_k>|^2 over a grid of p in (0, 1).
    """
    exponents = [_sub_one(p, "bound comparison") for p in p_grid]
    if not exponents:
        raise InputError("bound comparison needs a non-empty p grid")

    coherence = _coherence(f_pair, g_pair)
    uup = 1.0 / coherence.product
    synthesis_coherence = rt_coherence(f_pair, g_pair)
    if synthesis_coherence == 0.0:
        raise DegenerateBoundError("synthesis vectors of the two pairs are mutually orthogonal")
    rt = 1.0 / synthesis_coherence ** 2

    rows = []
    for p in exponents:
        discup = discup_bound(coherence, p)
        rows.append({
            "p": p.p,
            "discup_bound": discup,
            "uup_bound": uup,
            "rt_bound": rt,
            "below_uup": discup < uup,
        })
    return pd.DataFrame(rows, columns=["p", "discup_bound", "uup_bound", "rt_bound", "below_uup"])
