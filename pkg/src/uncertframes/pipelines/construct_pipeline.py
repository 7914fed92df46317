from typing import Any, Dict, List, Optional

from uncertframes.components.constructions import check_disc_norm_axioms
from uncertframes.components.frames import classify, verify_reconstruction
from uncertframes.config.config_schema import AppConfig
from uncertframes.pipelines.verify_pipeline import exponents
from uncertframes.schemas.frame_schema import ReferenceNorm
from uncertframes.services.matrix_io import write_pair
from uncertframes.services.pair_specs import parse_pair_spec
from uncertframes.services.report_writer import make_record
from uncertframes.utils.exceptions import InputError
from uncertframes.utils.logger import CustomLogger

DEFAULT_AXIOM_EXPONENTS = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9]
DEFAULT_CLASSIFY_EXPONENTS = [0.5, 1.0, 2.0, float("inf")]
DEFAULT_AXIOM_DIM = 4


class ConstructPipeline:
    """
    Builds a frame pair from a specifier, optionally writes it to a pair
    file, and reports its reconstruction residual and classification.
    With `disc_axioms` set it samples the disc-norm axioms instead.
    """

    def __init__(self, config: AppConfig, logger: Optional[CustomLogger] = None) -> None:
        self.config = config
        self.logger = logger or CustomLogger(module_name=__name__).get_logger()

    def _disc_axioms(self, params: Dict[str, Any], seed: int) -> List[Dict[str, Any]]:
        d = params.get("d") or DEFAULT_AXIOM_DIM
        samples = params.get("samples") or self.config.sampling.axiom_samples
        records = []
        for p in exponents(params, DEFAULT_AXIOM_EXPONENTS):
            report = check_disc_norm_axioms(p, d, sample_count=samples, seed=seed)
            records.append(make_record(report, violation=not report.all_passed))
        return records

    def _pair(self, params: Dict[str, Any], seed: int) -> List[Dict[str, Any]]:
        if not params.get("pair"):
            raise InputError("construct needs --pair or --disc-axioms")
        pair = parse_pair_spec(params["pair"], self.config.constructions)

        written = None
        if params.get("out"):
            written = str(write_pair(pair, params["out"]))

        reconstruction = verify_reconstruction(pair)
        record = make_record(reconstruction, violation=not reconstruction.holds)
        record.update(label=pair.label, d=pair.ambient_dim, m=pair.count, written_to=written)

        classification = classify(
            pair,
            exponents(params, DEFAULT_CLASSIFY_EXPONENTS),
            sample_count=self.config.sampling.classify_samples,
            seed=seed,
            reference=ReferenceNorm(params.get("reference") or "euclidean"),
            rel_tol=self.config.tolerances.norm_match_rel_tol,
        )
        return [record, make_record(classification)]

    def run(self, params: Dict[str, Any], seed: int) -> List[Dict[str, Any]]:
        try:
            self.logger.info("Starting construction")
            if params.get("disc_axioms"):
                records = self._disc_axioms(params, seed)
            else:
                records = self._pair(params, seed)
            self.logger.info(f"Construction produced {len(records)} record(s)")
            return records

        except Exception as e:
            self.logger.error(f"Construction failed: {e}", exc_info=True)
            raise
