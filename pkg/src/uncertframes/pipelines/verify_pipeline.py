from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from uncertframes.components.uncertainty import (
    compare_bounds,
    verify_discup,
    verify_fi,
    verify_mt,
    verify_rt_chain,
    verify_si,
    verify_uup,
)
from uncertframes.config.config_schema import AppConfig
from uncertframes.schemas.frame_schema import ReferenceNorm
from uncertframes.schemas.quasinorm_schema import SupportPolicy
from uncertframes.services.pair_specs import parse_pair_spec, parse_vector_spec
from uncertframes.services.report_writer import make_record, table_records
from uncertframes.utils.exceptions import InputError
from uncertframes.utils.logger import CustomLogger

DEFAULT_EXPONENTS = {
    "discup": [0.5],
    "fi": [0.5],
    "si": [0.5],
    "mt": [2.0],
    "uup": [1.0],
    "compare": [0.25, 0.5, 0.75],
}

SUB_ONE_VERIFIERS = {"discup": verify_discup, "fi": verify_fi, "si": verify_si}


def build_policy(params: Dict[str, Any], config: AppConfig) -> SupportPolicy:
    """Support policy from CLI params, falling back to the configured tolerances."""
    if params.get("exact"):
        return SupportPolicy.exact()
    rel_tol = params.get("rel_tol")
    abs_floor = params.get("abs_floor")
    return SupportPolicy(
        rel_tol=config.tolerances.support_rel_tol if rel_tol is None else rel_tol,
        abs_floor=config.tolerances.support_abs_floor if abs_floor is None else abs_floor,
    )


def flag_bound_violations(table: pd.DataFrame) -> pd.DataFrame:
    """
    Sort a bound comparison by p and mark rows that contradict c1 c2 < 1:
    1/(c1 c2)^p must stay below 1/(c1 c2) and grow strictly with p.
    """
    table = table.sort_values("p", kind="stable").drop_duplicates("p").reset_index(drop=True)
    increasing = table["discup_bound"].diff().fillna(1.0) > 0
    table["violation"] = (table["uup_bound"] > 1.0) & (~table["below_uup"] | ~increasing)
    return table


def exponents(params: Dict[str, Any], default: Sequence[float]) -> List[float]:
    values = params.get("p")
    return list(default) if not values else [float(v) for v in values]


class VerifyPipeline:
    """
    Runs one theorem verifier for a pair of frame pairs and a vector,
    once per requested exponent.
    """

    def __init__(self, config: AppConfig, logger: Optional[CustomLogger] = None) -> None:
        self.config = config
        self.logger = logger or CustomLogger(module_name=__name__).get_logger()

    def _pairs(self, params: Dict[str, Any]):
        if not params.get("pair_f") or not params.get("pair_g"):
            raise InputError("verify needs both --pair-f and --pair-g")
        return (
            parse_pair_spec(params["pair_f"], self.config.constructions),
            parse_pair_spec(params["pair_g"], self.config.constructions),
        )

    def _vector(self, params: Dict[str, Any]):
        if not params.get("x"):
            raise InputError("verify needs a vector, pass --x")
        return parse_vector_spec(params["x"])

    def run(self, params: Dict[str, Any], seed: int) -> List[Dict[str, Any]]:
        theorem = params.get("theorem", "discup")
        try:
            self.logger.info(f"Starting verification of {theorem}")
            f_pair, g_pair = self._pairs(params)
            slack = self.config.tolerances.bound_slack
            p_list = exponents(params, DEFAULT_EXPONENTS.get(theorem, []))

            if theorem == "compare":
                table = flag_bound_violations(compare_bounds(f_pair, g_pair, p_list))
                records = table_records(table, "BoundComparison", violation_column="violation")

            elif theorem == "rt":
                report = verify_rt_chain(
                    f_pair,
                    g_pair,
                    self._vector(params),
                    policy=build_policy(params, self.config),
                    tol=self.config.tolerances.reconstruction_tol,
                    slack=slack,
                )
                records = [make_record(report, violation=not report.all_hold)]

            else:
                x = self._vector(params)
                policy = build_policy(params, self.config)
                records = []
                for p in p_list:
                    if theorem in SUB_ONE_VERIFIERS:
                        report = SUB_ONE_VERIFIERS[theorem](f_pair, g_pair, x, p, policy=policy, slack=slack)
                    elif theorem == "mt":
                        report = verify_mt(
                            f_pair,
                            g_pair,
                            x,
                            p,
                            policy=policy,
                            reference=ReferenceNorm(params.get("reference") or "euclidean"),
                            sample_count=self.config.sampling.classify_samples,
                            seed=seed,
                            slack=slack,
                        )
                    elif theorem == "uup":
                        report = verify_uup(f_pair, g_pair, x, p, policy=policy, slack=slack)
                    else:
                        raise InputError(f"unknown theorem {theorem!r}")
                    records.append(make_record(report, violation=not report.holds))

            self.logger.info(f"Verification of {theorem} produced {len(records)} record(s)")
            return records

        except Exception as e:
            self.logger.error(f"Verification of {theorem} failed: {e}", exc_info=True)
            raise
