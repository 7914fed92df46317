"""
Command-line front end.

Reports go to stdout (json by default), diagnostics to stderr and the log
file. Exit status: 0 when every checked inequality holds, 1 when any
record reports a violation, 2 on usage or input errors.
"""

import argparse
import sys
from typing import BinaryIO, List, Optional

from uncertframes import __version__
from uncertframes.config.config_loader import ConfigLoadError, ConfigValidationError
from uncertframes.config.config_manager import ConfigManager
from uncertframes.schemas.run_schema import Command, OutputFormat, RunConfig
from uncertframes.schemas.search_schema import SearchStrategy
from uncertframes.services.report_writer import ReportWriter
from uncertframes.utils.exceptions import UncertFramesError
from uncertframes.utils.logger import CustomLogger

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

THEOREMS = ["discup", "fi", "si", "rt", "mt", "uup", "compare"]
RUN_KEYS = {"command", "seed", "output_format"}


def _float_list(text: str) -> List[float]:
    try:
        return [float(token) for token in text.split(",") if token.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected a comma list of numbers, got {text!r}") from e


def _int_list(text: str) -> List[int]:
    try:
        return [int(token) for token in text.split(",") if token.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected a comma list of integers, got {text!r}") from e


def _add_policy_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--rel-tol", type=float, dest="rel_tol", help="Support threshold relative to max |entry|.")
    parser.add_argument("--abs-floor", type=float, dest="abs_floor", help="Absolute support threshold floor.")
    parser.add_argument("--exact", action="store_true", help="Count exactly nonzero entries only.")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="Seed for every randomized step.")
    common.add_argument(
        "--format",
        dest="output_format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.JSON.value,
        help="Report format (default: json).",
    )

    parser = argparse.ArgumentParser(
        prog="uncertframes",
        description="Check uncertainty principles for p-Schauder frames at finite dimension.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", parents=[common], help="Verify one uncertainty principle.")
    verify.add_argument("--theorem", choices=THEOREMS, default="discup")
    verify.add_argument("--pair-f", dest="pair_f", required=True, help="identity:d, dft:n, random:d:seed[:m] or file:PATH")
    verify.add_argument("--pair-g", dest="pair_g", required=True)
    verify.add_argument("--x", help="comb:n:s[:o], spike:n:i, ones:n, random:n:seed or a comma list")
    verify.add_argument("--p", type=_float_list, help="Exponent or comma list of exponents.")
    verify.add_argument("--reference", choices=["euclidean", "lp"], default=None)
    _add_policy_options(verify)

    garling = commands.add_parser("garling", parents=[common], help="Check the Garling inequality.")
    garling.add_argument("--n", type=int, default=None, help="Length of each random sequence.")
    garling.add_argument("--count", type=int, default=None, help="Number of random sequences.")
    garling.add_argument("--p", type=_float_list)
    garling.add_argument("--values", help="Explicit sequence instead of random draws.")

    counter = commands.add_parser(
        "counterexample", parents=[common], help="Continuous-measure witness against Garling."
    )
    counter.add_argument("--p", type=_float_list)
    counter.add_argument("--measure", type=float, default=None)
    counter.add_argument("--value", type=float, default=None)

    construct = commands.add_parser("construct", parents=[common], help="Build, save and classify a pair.")
    construct.add_argument("--pair")
    construct.add_argument("--out", help="Write the pair to this CSV file.")
    construct.add_argument("--reference", choices=["euclidean", "lp"], default=None)
    construct.add_argument("--disc-axioms", dest="disc_axioms", action="store_true")
    construct.add_argument("--p", type=_float_list)
    construct.add_argument("--d", type=int, default=None)
    construct.add_argument("--samples", type=int, default=None)

    search = commands.add_parser("search", parents=[common], help="Minimize the support product.")
    search.add_argument("--pair-f", dest="pair_f", required=True)
    search.add_argument("--pair-g", dest="pair_g", required=True)
    search.add_argument("--strategy", choices=[s.value for s in SearchStrategy], default=None)
    search.add_argument("--budget", type=int, default=None)
    search.add_argument("--max-support", dest="max_support", type=int, default=None)
    search.add_argument("--retries", type=int, default=None)
    _add_policy_options(search)

    sweep = commands.add_parser("sweep", parents=[common], help="Identity-vs-DFT tightness table.")
    sweep.add_argument("--n", type=_int_list, default=None)
    sweep.add_argument("--p", type=_float_list)
    sweep.add_argument("--strategy", choices=[s.value for s in SearchStrategy], default=None)
    sweep.add_argument("--budget", type=int, default=None)
    sweep.add_argument("--max-support", dest="max_support", type=int, default=None)
    sweep.add_argument("--retries", type=int, default=None)
    _add_policy_options(sweep)

    minors = commands.add_parser("minors", parents=[common], help="Scan DFT minors for singular ones.")
    minors.add_argument("--n", type=int, required=True)
    minors.add_argument("--max-size", dest="max_size", type=int, default=None)
    minors.add_argument("--budget", type=int, default=None)

    return parser


def parse_run_config(argv: Optional[List[str]] = None) -> RunConfig:
    parser = build_parser()
    args = vars(parser.parse_args(argv))
    seed = args["seed"]
    if seed is None:
        try:
            seed = ConfigManager().sampling.default_seed
        except (ConfigLoadError, ConfigValidationError) as e:
            parser.error(f"cannot load configuration: {e}")
    params = {k: v for k, v in args.items() if k not in RUN_KEYS and v is not None and v is not False}
    return RunConfig(
        command=Command(args["command"]),
        params=params,
        seed=seed,
        output_format=OutputFormat(args["output_format"]),
    )


def run(config: RunConfig, out: BinaryIO) -> int:
    """Execute one command, write its report to `out` and return the exit status."""
    try:
        # component modules build their loggers from the config at import time
        from uncertframes.pipelines.main_pipeline import MainPipeline

        logger = CustomLogger(module_name="uncertframes").get_logger()
        pipeline = MainPipeline(config=ConfigManager().appconfig, logger=logger)
        payload = pipeline.run(config)
    except (UncertFramesError, ValueError, OSError, ConfigLoadError, ConfigValidationError) as e:
        print(f"uncertframes {config.command.value}: error: {e}", file=sys.stderr)
        return EXIT_USAGE

    ReportWriter(config.output_format).write(payload, out)
    if any(record["violation"] for record in payload["records"]):
        return EXIT_VIOLATION
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    try:
        config = parse_run_config(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    return run(config, sys.stdout.buffer)


if __name__ == "__main__":
    sys.exit(main())
