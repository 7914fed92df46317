"""
Extremal exploration: how small can ||theta_f x||_0 ||theta_g x||_0 get,
and what do square minors of the DFT look like in prime dimensions.

Every product reported is attained by a concrete minimizer, so search
results are upper bounds on the true minimum.
"""

import math
from itertools import combinations, islice
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from joblib import Parallel, delayed
from scipy.linalg import dft
from sympy import divisors, isprime

from uncertframes.components.constructions import dft_pair, dirac_comb, identity_pair
from uncertframes.components.frames import (
    FramePair,
    analyze,
    cross_coherence,
    is_parseval,
    rt_coherence,
    verify_reconstruction,
)
from uncertframes.components.quasinorm import ExponentLike, support, support_count
from uncertframes.components.uncertainty import discup_bound
from uncertframes.schemas.quasinorm_schema import PExponent, SupportPolicy
from uncertframes.schemas.search_schema import MinorReport, SearchOutcome, SearchStrategy
from uncertframes.utils.exceptions import (
    ClassificationError,
    DegenerateBoundError,
    InputError,
    RegimeError,
    SearchBudgetError,
)
from uncertframes.utils.logger import CustomLogger

DEFAULT_MAX_SUPPORT = 6
DEFAULT_MAX_EXHAUSTIVE_DIM = 12
DEFAULT_GENERIC_RETRIES = 32
DEFAULT_MINOR_BUDGET = 1_000_000
DEFAULT_MINOR_THRESHOLD_SCALE = 1e-10
TIGHTNESS_REL_TOL = 1e-9
BATCH_SIZE = 256
MINOR_CHUNK = 100_000

# (product, s_f + s_g, f-support, x, (s_f, s_g)); ordering uses the first three only
Candidate = Tuple[int, int, Tuple[int, ...], np.ndarray, Tuple[int, int]]


def _better(first: Optional[Candidate], second: Optional[Candidate]) -> Optional[Candidate]:
    if first is None:
        return second
    if second is None:
        return first
    return second if second[:3] < first[:3] else first


class ExtremalSearch:
    """
    Minimize the support product of two frame pairs over candidate vectors.

    Candidates are produced lazily by a strategy, evaluated in batches
    (in parallel when threads > 1) and reduced deterministically: smallest
    product first, then the smaller s_f + s_g, then the lexicographically
    smallest f-support.
    """

    def __init__(
        self,
        f_pair: FramePair,
        g_pair: FramePair,
        policy: Optional[SupportPolicy] = None,
        max_support: int = DEFAULT_MAX_SUPPORT,
        max_exhaustive_dim: int = DEFAULT_MAX_EXHAUSTIVE_DIM,
        generic_retries: int = DEFAULT_GENERIC_RETRIES,
        threads: int = 1,
        logger=None,
    ) -> None:
        if f_pair.ambient_dim != g_pair.ambient_dim:
            raise InputError(
                f"pairs live in different dimensions: {f_pair.ambient_dim} vs {g_pair.ambient_dim}"
            )
        for pair in (f_pair, g_pair):
            check = verify_reconstruction(pair)
            if not check.holds:
                raise ClassificationError(f"{pair!r} does not reconstruct")

        self.f_pair = f_pair
        self.g_pair = g_pair
        self.policy = policy or SupportPolicy.default()
        self.max_support = max_support
        self.max_exhaustive_dim = max_exhaustive_dim
        self.generic_retries = generic_retries
        self.threads = max(1, int(threads))
        self.logger = logger or CustomLogger(module_name=__name__).get_logger()

        self.strategies: Dict[SearchStrategy, Callable[[int], Iterator[Callable[[], Candidate]]]] = {
            SearchStrategy.COMBS: self._comb_candidates,
            SearchStrategy.EXHAUSTIVE_SUPPORTS: self._support_candidates,
            SearchStrategy.RANDOM_RESTARTS: self._random_candidates,
        }

    @property
    def dim(self) -> int:
        return self.f_pair.ambient_dim

    # === candidate evaluation ===

    def _evaluate(self, x: np.ndarray) -> Candidate:
        theta_f = analyze(self.f_pair, x)
        f_support = support(theta_f, self.policy)
        s_f = len(f_support)
        s_g = support_count(analyze(self.g_pair, x), self.policy)
        return s_f * s_g, s_f + s_g, f_support, x, (s_f, s_g)

    def _evaluate_on_support(self, indices: Tuple[int, ...], rng: np.random.Generator, retries: int) -> Candidate:
        """
        Vectors whose f-coefficients live on `indices`: one generic draw plus
        `retries` kernel probes, each zeroing |S|-1 random g-coefficients.
        """
        basis = self.f_pair.synthesis[:, list(indices)]
        induced = self.g_pair.analysis @ basis
        k = len(indices)

        def draw() -> np.ndarray:
            return rng.standard_normal(k) + 1j * rng.standard_normal(k)

        best = self._evaluate(basis @ draw())
        if k == 1:
            return best

        for _ in range(retries):
            rows = rng.choice(induced.shape[0], size=k - 1, replace=False)
            _, _, vh = np.linalg.svd(induced[rows], full_matrices=True)
            coeffs = vh[-1].conj()
            if not np.any(np.abs(coeffs) > 0):
                continue
            best = _better(best, self._evaluate(basis @ coeffs))
        return best

    # === strategies ===

    def _comb_candidates(self, seed: int) -> Iterator[Callable[[], Candidate]]:
        n = self.dim
        for spacing in divisors(n):
            for offset in range(spacing):
                comb = dirac_comb(n, int(spacing), offset)
                yield lambda comb=comb: self._evaluate(comb)

    def _support_candidates(self, seed: int) -> Iterator[Callable[[], Candidate]]:
        if self.dim > self.max_exhaustive_dim:
            raise InputError(
                f"exhaustive support search is limited to dimension {self.max_exhaustive_dim}, got {self.dim}"
            )
        index = 0
        for k in range(1, min(self.max_support, self.dim) + 1):
            for indices in combinations(range(self.f_pair.count), k):
                rng = np.random.default_rng([seed, index])
                yield lambda indices=indices, rng=rng: self._evaluate_on_support(
                    indices, rng, self.generic_retries
                )
                index += 1

    def _random_candidates(self, seed: int) -> Iterator[Callable[[], Candidate]]:
        cap = min(self.max_support, self.dim)
        index = 0
        while True:
            rng = np.random.default_rng([seed, index])
            k = int(rng.integers(1, cap + 1))
            indices = tuple(sorted(int(i) for i in rng.choice(self.f_pair.count, size=k, replace=False)))
            yield lambda indices=indices, rng=rng: self._evaluate_on_support(indices, rng, 1)
            index += 1

    # === driver ===

    def _bounds(self) -> Tuple[float, Optional[float]]:
        coherence = cross_coherence(self.f_pair, self.g_pair)
        if coherence.degenerate:
            raise DegenerateBoundError("zero cross-coherence; the support bound is infinite")
        uup = 1.0 / coherence.product

        rt = None
        if is_parseval(self.f_pair) and is_parseval(self.g_pair):
            rt = 1.0 / rt_coherence(self.f_pair, self.g_pair) ** 2
        return uup, rt

    def run(self, strategy: SearchStrategy, budget: int, seed: int = 0) -> SearchOutcome:
        strategy = SearchStrategy(strategy)
        if budget < 1:
            raise InputError(f"budget must be at least 1, got {budget}")

        self.logger.info(
            f"Starting {strategy.value} search on {self.f_pair!r} vs {self.g_pair!r} "
            f"(budget={budget}, seed={seed}, threads={self.threads})"
        )
        uup, rt = self._bounds()
        tasks = islice(self.strategies[strategy](seed), budget)

        best: Optional[Candidate] = None
        examined = 0
        with Parallel(n_jobs=self.threads, prefer="threads") as parallel:
            while True:
                batch = list(islice(tasks, BATCH_SIZE))
                if not batch:
                    break
                for result in parallel(delayed(task)() for task in batch):
                    best = _better(best, result)
                examined += len(batch)

        if best is None:
            self.logger.error(f"{strategy.value} search examined no candidate")
            raise SearchBudgetError(f"{strategy.value} search produced no candidate within budget {budget}")

        product, _, _, x, supports = best
        bound, bound_kind = (rt, "RT") if rt is not None and rt >= uup else (uup, "UUP")
        outcome = SearchOutcome(
            strategy=strategy,
            minimizer=[(float(v.real), float(v.imag)) for v in x],
            supports=supports,
            min_product=product,
            bound=bound,
            bound_kind=bound_kind,
            uup_bound=uup,
            rt_bound=rt,
            tight=product <= bound * (1.0 + TIGHTNESS_REL_TOL),
            candidates_examined=examined,
            pair_labels=(self.f_pair.label, self.g_pair.label),
        )
        self.logger.info(
            f"{strategy.value} search finished: min product {product} "
            f"({bound_kind} bound {bound:.6g}) after {examined} candidates"
        )
        return outcome


def min_uncertainty_product(
    f_pair: FramePair,
    g_pair: FramePair,
    strategy: SearchStrategy = SearchStrategy.COMBS,
    budget: int = 100_000,
    seed: int = 0,
    policy: Optional[SupportPolicy] = None,
    **search_options,
) -> SearchOutcome:
    return ExtremalSearch(f_pair, g_pair, policy=policy, **search_options).run(strategy, budget, seed)


# === DFT minors ===

def _minor_batches(
    n: int,
    k: int,
    draws: Optional[int],
    rng: np.random.Generator,
) -> Iterator[Tuple[np.ndarray, np.ndarray]]:
    """
    (row subsets, column subsets) of size k, one minor per row of each array.

    draws=None enumerates every pair in lexicographic order; otherwise
    `draws` pairs are sampled uniformly.
    """
    if draws is None:
        col_sets = np.array(list(combinations(range(n), k)))
        for rows in combinations(range(n), k):
            yield np.tile(rows, (len(col_sets), 1)), col_sets
        return

    for start in range(0, draws, MINOR_CHUNK):
        size = min(MINOR_CHUNK, draws - start)
        base = np.tile(np.arange(n), (size, 1))
        rows = np.sort(rng.permuted(base, axis=1)[:, :k], axis=1)
        cols = np.sort(rng.permuted(base, axis=1)[:, :k], axis=1)
        yield rows, cols


def tao_minor_check(
    n: int,
    max_size: int,
    budget: int = DEFAULT_MINOR_BUDGET,
    seed: int = 0,
    threshold_scale: float = DEFAULT_MINOR_THRESHOLD_SCALE,
) -> MinorReport:
    """
    Scan square minors of the unnormalized n-point DFT up to max_size.

    A minor of size k counts as singular when |det| < threshold_scale * sqrt(k!).
    All minors are enumerated in lexicographic (rows, cols) order unless their
    number exceeds `budget`, in which case about `budget` minors are sampled.
    """
    if int(n) != n or n < 1:
        raise InputError(f"n must be a positive integer, got {n}")
    if not 1 <= max_size <= n:
        raise InputError(f"max_size must lie in [1, {n}], got {max_size}")

    logger = CustomLogger(module_name=__name__).get_logger()
    matrix = dft(n)
    total = sum(math.comb(n, k) ** 2 for k in range(1, max_size + 1))
    sampled = total > budget
    rng = np.random.default_rng(seed)

    min_abs_det = math.inf
    witness = None
    singular_count = 0
    examined = 0

    for k in range(1, max_size + 1):
        threshold = threshold_scale * math.sqrt(math.factorial(k))
        draws = max(1, round(budget * math.comb(n, k) ** 2 / total)) if sampled else None

        for rows, cols in _minor_batches(n, k, draws, rng):
            dets = np.abs(np.linalg.det(matrix[rows[:, :, None], cols[:, None, :]]))
            examined += len(dets)
            min_abs_det = min(min_abs_det, float(dets.min()))
            singular = np.flatnonzero(dets < threshold)
            singular_count += len(singular)
            if witness is None and len(singular):
                first = singular[0]
                witness = (tuple(int(r) for r in rows[first]), tuple(int(c) for c in cols[first]))

    logger.info(
        f"DFT minor scan n={n}, max_size={max_size}: {examined} minors "
        f"({'sampled' if sampled else 'exhaustive'}), {singular_count} singular"
    )
    return MinorReport(
        n=n,
        max_size_checked=max_size,
        singular_minor_found=witness is not None,
        witness=witness,
        min_abs_det_seen=min_abs_det,
        minors_examined=examined,
        singular_count=singular_count,
        sampled=sampled,
    )


# === tightness sweep ===

def tightness_sweep(
    n_list: Iterable[int],
    p_grid: Sequence[ExponentLike],
    strategy: SearchStrategy = SearchStrategy.COMBS,
    seed: int = 0,
    budget: int = 100_000,
    policy: Optional[SupportPolicy] = None,
    **search_options,
) -> pd.DataFrame:
    """Identity-vs-DFT gap between n^p and the smallest support product found."""
    exponents = [PExponent.of(p) for p in p_grid]
    for p in exponents:
        if not p.is_sub_one:
            raise RegimeError(f"sweep exponents must lie in (0, 1), got p={p.p}")

    rows: List[dict] = []
    for n in n_list:
        if int(n) != n or n < 2:
            raise InputError(f"sweep dimensions must be integers >= 2, got {n}")
        f_pair, g_pair = identity_pair(n), dft_pair(n)
        outcome = min_uncertainty_product(
            f_pair, g_pair, strategy=strategy, budget=budget, seed=seed, policy=policy, **search_options
        )
        coherence = cross_coherence(f_pair, g_pair)
        for p in exponents:
            bound = discup_bound(coherence, p)
            rows.append({
                "n": int(n),
                "is_prime": bool(isprime(int(n))),
                "p": p.p,
                "discup_bound": bound,
                "min_product_found": outcome.min_product,
                "slack": outcome.min_product / bound,
            })
    return pd.DataFrame(
        rows, columns=["n", "is_prime", "p", "discup_bound", "min_product_found", "slack"]
    )
