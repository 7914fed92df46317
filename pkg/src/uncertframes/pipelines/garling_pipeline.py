from typing import Any, Dict, List, Optional

import numpy as np

from uncertframes.components.quasinorm import continuous_garling_counterexample, garling_check
from uncertframes.config.config_schema import AppConfig
from uncertframes.pipelines.verify_pipeline import exponents
from uncertframes.services.pair_specs import parse_vector_spec
from uncertframes.services.report_writer import make_record
from uncertframes.utils.exceptions import InputError
from uncertframes.utils.logger import CustomLogger


class GarlingPipeline:
    """
    Checks (sum |a_n|)^p <= sum |a_n|^p on a given sequence, or on `count`
    complex Gaussian sequences of length n drawn from the run seed.
    """

    def __init__(self, config: AppConfig, logger: Optional[CustomLogger] = None) -> None:
        self.config = config
        self.logger = logger or CustomLogger(module_name=__name__).get_logger()

    def _sequences(self, params: Dict[str, Any], seed: int) -> List[np.ndarray]:
        if params.get("values"):
            return [parse_vector_spec(params["values"])]

        n = params.get("n")
        count = params.get("count")
        n = 1 if n is None else n
        count = 1 if count is None else count
        if n < 1 or count < 1:
            raise InputError(f"garling needs n >= 1 and count >= 1, got n={n}, count={count}")
        rng = np.random.default_rng(seed)
        draws = rng.standard_normal((count, n)) + 1j * rng.standard_normal((count, n))
        return list(draws / np.sqrt(2.0))

    def run(self, params: Dict[str, Any], seed: int) -> List[Dict[str, Any]]:
        try:
            self.logger.info("Starting Garling check")
            rel_tol = self.config.tolerances.garling_rel_tol
            records = []
            for p in exponents(params, [0.5]):
                for sequence in self._sequences(params, seed):
                    result = garling_check(sequence, p, rel_tol=rel_tol)
                    records.append(make_record(result, violation=not result.holds))

            failed = sum(record["violation"] for record in records)
            self.logger.info(f"Garling check: {len(records)} sequence(s), {failed} violation(s)")
            return records

        except Exception as e:
            self.logger.error(f"Garling check failed: {e}", exc_info=True)
            raise


class CounterexamplePipeline:
    """Evaluates the constant-function witness that the continuous Garling inequality fails."""

    def __init__(self, config: AppConfig, logger: Optional[CustomLogger] = None) -> None:
        self.config = config
        self.logger = logger or CustomLogger(module_name=__name__).get_logger()

    def run(self, params: Dict[str, Any], seed: int) -> List[Dict[str, Any]]:
        try:
            measure = params.get("measure")
            value = params.get("value")
            records = []
            for p in exponents(params, [0.5]):
                witness = continuous_garling_counterexample(
                    p,
                    measure=0.5 if measure is None else measure,
                    value=1.0 if value is None else value,
                )
                records.append(make_record(witness, violation=not witness.is_witness))
            return records

        except Exception as e:
            self.logger.error(f"Counterexample evaluation failed: {e}", exc_info=True)
            raise
