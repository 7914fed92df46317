import os
from typing import Any, Dict, List, Optional

from sympy import isprime

from uncertframes.components.search import min_uncertainty_product, tao_minor_check, tightness_sweep
from uncertframes.components.uncertainty import bound_holds
from uncertframes.config.config_schema import AppConfig
from uncertframes.pipelines.verify_pipeline import build_policy, exponents
from uncertframes.schemas.search_schema import SearchStrategy
from uncertframes.services.pair_specs import parse_pair_spec
from uncertframes.services.report_writer import make_record, table_records
from uncertframes.utils.exceptions import InputError
from uncertframes.utils.logger import CustomLogger

THREADS_ENV = "UNCERT_FRAMES_THREADS"


def resolve_threads(configured: int) -> int:
    """Configured thread count, capped by UNCERT_FRAMES_THREADS when it is set."""
    raw = os.environ.get(THREADS_ENV)
    if not raw:
        return configured
    try:
        cap = int(raw)
    except ValueError as e:
        raise InputError(f"{THREADS_ENV} must be an integer, got {raw!r}") from e
    if cap < 1:
        raise InputError(f"{THREADS_ENV} must be at least 1, got {cap}")
    return min(configured, cap)


class _SearchStage:
    def __init__(self, config: AppConfig, logger: Optional[CustomLogger] = None) -> None:
        self.config = config
        self.logger = logger or CustomLogger(module_name=__name__).get_logger()

    def _search_options(self, params: Dict[str, Any]) -> Dict[str, Any]:
        search = self.config.search
        return {
            "max_support": params.get("max_support") or search.max_support,
            "max_exhaustive_dim": search.max_exhaustive_dim,
            "generic_retries": params.get("retries") or search.generic_retries,
            "threads": resolve_threads(search.threads),
            "logger": self.logger,
        }

    def _budget(self, params: Dict[str, Any]) -> int:
        return params.get("budget") or self.config.search.default_budget


class SearchPipeline(_SearchStage):
    """Smallest support product found for two frame pairs."""

    def run(self, params: Dict[str, Any], seed: int) -> List[Dict[str, Any]]:
        try:
            if not params.get("pair_f") or not params.get("pair_g"):
                raise InputError("search needs both --pair-f and --pair-g")
            f_pair = parse_pair_spec(params["pair_f"], self.config.constructions)
            g_pair = parse_pair_spec(params["pair_g"], self.config.constructions)

            outcome = min_uncertainty_product(
                f_pair,
                g_pair,
                strategy=SearchStrategy(params.get("strategy") or "combs"),
                budget=self._budget(params),
                seed=seed,
                policy=build_policy(params, self.config),
                **self._search_options(params),
            )
            # an attained product below the proven support bound refutes it
            violation = not bound_holds(outcome.min_product, outcome.uup_bound, self.config.tolerances.bound_slack)
            return [make_record(outcome, violation=violation)]

        except Exception as e:
            self.logger.error(f"Extremal search failed: {e}", exc_info=True)
            raise


class SweepPipeline(_SearchStage):
    """Identity-vs-DFT tightness table over dimensions and exponents."""

    def run(self, params: Dict[str, Any], seed: int) -> List[Dict[str, Any]]:
        try:
            n_list = params.get("n") or [4, 5, 6, 7, 8]
            table = tightness_sweep(
                n_list,
                exponents(params, [0.25, 0.5, 0.75]),
                strategy=SearchStrategy(params.get("strategy") or "combs"),
                seed=seed,
                budget=self._budget(params),
                policy=build_policy(params, self.config),
                **self._search_options(params),
            )
            slack = self.config.tolerances.bound_slack
            table["violation"] = [
                not bound_holds(found, bound, slack)
                for found, bound in zip(table["min_product_found"], table["discup_bound"])
            ]
            self.logger.info(f"Sweep over n={list(n_list)} produced {len(table)} row(s)")
            return table_records(table, "TightnessRow", violation_column="violation")

        except Exception as e:
            self.logger.error(f"Tightness sweep failed: {e}", exc_info=True)
            raise


class MinorsPipeline(_SearchStage):
    """Scans square minors of the n-point DFT for singular ones."""

    def run(self, params: Dict[str, Any], seed: int) -> List[Dict[str, Any]]:
        try:
            n = params.get("n")
            if not n:
                raise InputError("minors needs --n")
            max_size = params.get("max_size") or n
            report = tao_minor_check(
                n,
                max_size,
                budget=params.get("budget") or self.config.search.minor_enumeration_cap,
                seed=seed,
                threshold_scale=self.config.search.minor_threshold_scale,
            )
            # in prime dimension every minor of the DFT is nonsingular
            violation = bool(isprime(n)) and report.singular_minor_found
            return [make_record(report, violation=violation)]

        except Exception as e:
            self.logger.error(f"Minor scan failed: {e}", exc_info=True)
            raise
