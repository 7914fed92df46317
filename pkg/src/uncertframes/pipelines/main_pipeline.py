import logging
from typing import Any, Dict

from uncertframes import __version__
from uncertframes.config.config_schema import AppConfig
from uncertframes.pipelines.construct_pipeline import ConstructPipeline
from uncertframes.pipelines.garling_pipeline import CounterexamplePipeline, GarlingPipeline
from uncertframes.pipelines.search_pipeline import MinorsPipeline, SearchPipeline, SweepPipeline
from uncertframes.pipelines.verify_pipeline import VerifyPipeline
from uncertframes.schemas.run_schema import Command, RunConfig


class MainPipeline:
    """
    Dispatches a RunConfig to the pipeline for its command and assembles
    the payload {version, config, records}.
    """

    stages = {
        Command.VERIFY: VerifyPipeline,
        Command.GARLING: GarlingPipeline,
        Command.COUNTEREXAMPLE: CounterexamplePipeline,
        Command.CONSTRUCT: ConstructPipeline,
        Command.SEARCH: SearchPipeline,
        Command.SWEEP: SweepPipeline,
        Command.MINORS: MinorsPipeline,
    }

    def __init__(
        self,
        config: AppConfig,
        logger: logging.Logger,
    ) -> None:
        self.config = config
        self.logger = logger

    def run(self, run_config: RunConfig) -> Dict[str, Any]:
        """
        Run one command.

        Returns:
            The payload. Each record carries its own violation flag.

        Raises:
            Exception if the stage fails.
        """
        try:
            self.logger.info(f"Starting {run_config.command.value} (seed={run_config.seed})")

            stage = self.stages[run_config.command](config=self.config, logger=self.logger)
            records = stage.run(dict(run_config.params), run_config.seed)

            payload = {
                "version": __version__,
                "config": run_config.model_dump(),
                "records": records,
            }
            violations = sum(record["violation"] for record in records)
            if violations:
                self.logger.warning(f"{run_config.command.value}: {violations} violation(s) reported")
            self.logger.info(f"{run_config.command.value} completed with {len(records)} record(s).")
            return payload

        except Exception as e:
            self.logger.error(f"{run_config.command.value} failed: {e}", exc_info=True)
            raise

        finally:
            self.logger.info(f"{run_config.command.value} finished.")
