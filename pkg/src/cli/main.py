import argparse
import math
import sys
from typing import List, Optional

import pandas as pd
from pydantic import ValidationError

from src import __version__
from src.cli.commands import (
    cmd_entropy,
    cmd_jw,
    cmd_phase,
    cmd_spectrum,
    cmd_stats,
    cmd_sweep,
    cmd_verify,
)
from src.cli.config import RunConfig
from src.constants import OutputFormat
from src.exceptions import TriangularStarError, UsageError
from src.model import Couplings
from src.utils import dumps, save_dataframe, write_text
from utils.ml_logging import get_logger

logger = get_logger("trianglestar.cli")

# Subcommands with a table form; the rest only print JSON
TABULAR_COMMANDS = ("spectrum", "sweep")


class CliArgumentParser(argparse.ArgumentParser):
    """Raises UsageError instead of exiting with status 2."""

    def error(self, message: str) -> None:
        raise UsageError(message)


def positive_float(text: str) -> float:
    value = float(text)
    if not math.isfinite(value) or value <= 0:
        raise argparse.ArgumentTypeError(f"must be a positive finite number, got {text}")
    return value


def parse_arguments(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """
    Parses command-line arguments.
    """
    common = CliArgumentParser(add_help=False)
    for name in ("jx", "jy", "jz", "jp"):
        common.add_argument(f"--{name}", type=float, default=None, help=f"Coupling {name} (default: headline point).")
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default=None, help="Output format.")
    common.add_argument("--output", type=str, default=None, help="Write output to this file instead of stdout.")
    common.add_argument("--config", type=str, default=None, help="JSON file validated against the RunConfig schema.")

    parser = CliArgumentParser(
        prog="trianglestar",
        description="Exact diagonalization and statistics of the four-spin triangular-star model.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=CliArgumentParser)

    sub.add_parser("spectrum", parents=[common], help="Grouped levels with analytic labels.")

    verify = sub.add_parser("verify", parents=[common], help="Run every invariant check.")
    verify.add_argument("--tol", type=positive_float, default=None, help="Override every check threshold.")
    verify.add_argument("--catalog", type=str, default=None, help="YAML file overriding catalog states.")

    stats = sub.add_parser("stats", parents=[common], help="Statistical matrix of a permutation on named states.")
    stats.add_argument("--basis", required=True, help="Comma-separated state names, e.g. g1,g3.")
    stats.add_argument("--perm", required=True, help="pair, s1s2-style plaquette swap, or t14.")
    stats.add_argument("--strict", action="store_true", help="Reject non-orthonormal bases.")

    phase = sub.add_parser("phase", parents=[common], help="Per-configuration phase map of a permuted state.")
    phase.add_argument("--state", required=True)
    phase.add_argument("--perm", required=True)

    sub.add_parser("jw", parents=[common], help="Jordan-Wigner fermionization report.")

    entropy = sub.add_parser("entropy", parents=[common], help="Reduced density matrix and entropy.")
    entropy.add_argument("--state", required=True)
    entropy.add_argument("--keep", required=True, help="Comma-separated kept sites, e.g. 2,3,4.")

    sweep = sub.add_parser("sweep", parents=[common], help="Spectrum along one coupling.")
    sweep.add_argument("--param", required=True, choices=["jx", "jy", "jz", "jp"])
    sweep.add_argument("--from", dest="start", type=float, required=True)
    sweep.add_argument("--to", dest="stop", type=float, required=True)
    sweep.add_argument("--steps", type=int, required=True)

    return parser.parse_args(argv)


def build_config(args: argparse.Namespace) -> RunConfig:
    """--config file first, then explicit flags on top."""
    if args.config:
        try:
            with open(args.config, "r", encoding="utf-8") as file:
                config = RunConfig.model_validate_json(file.read())
        except OSError as e:
            raise UsageError(f"Cannot read config file {args.config}: {e}") from e
    else:
        config = RunConfig()

    overrides = {name: getattr(args, name) for name in ("jx", "jy", "jz", "jp") if getattr(args, name) is not None}
    couplings = Couplings(**{**config.couplings.model_dump(), **overrides})
    update = {"couplings": couplings}
    if args.format is not None:
        update["output_format"] = OutputFormat(args.format)
    elif args.command == "sweep" and not args.config:
        update["output_format"] = OutputFormat.CSV
    if args.output is not None:
        update["output_path"] = args.output
    if getattr(args, "catalog", None):
        update["catalog_file"] = args.catalog
    config = config.model_copy(update=update)
    if config.output_format.is_tabular and args.command not in TABULAR_COMMANDS:
        raise UsageError(f"{args.command} has no CSV form; use --format json")
    return config


def dispatch(args: argparse.Namespace, config: RunConfig):
    if args.command == "spectrum":
        return cmd_spectrum(config)
    if args.command == "verify":
        return cmd_verify(config, tol=args.tol)
    if args.command == "stats":
        return cmd_stats(config, args.basis, args.perm, strict=args.strict)
    if args.command == "phase":
        return cmd_phase(config, args.state, args.perm)
    if args.command == "jw":
        return cmd_jw(config)
    if args.command == "entropy":
        return cmd_entropy(config, args.state, args.keep)
    if args.command == "sweep":
        return cmd_sweep(config, args.param, args.start, args.stop, args.steps)
    raise UsageError(f"Unknown command {args.command!r}")


def main(argv: Optional[List[str]] = None) -> int:
    """Run one subcommand; 0 success, 1 usage error, 2 verification or validation failure."""
    output_path = None
    try:
        args = parse_arguments(argv)
        output_path = args.output
        config = build_config(args)
        code, payload = dispatch(args, config)
        if isinstance(payload, pd.DataFrame):
            save_dataframe(payload, config.output_path, file_format="csv")
        else:
            write_text(dumps(payload), config.output_path)
        return code
    except TriangularStarError as e:
        logger.error(f"{type(e).__name__}: {e.detail}")
        write_text(dumps(e.to_report()), output_path)
        return e.EXIT_CODE
    except ValidationError as e:
        logger.error(f"Invalid configuration: {e}")
        write_text(dumps({"error": "UsageError", "detail": str(e)}), output_path)
        return UsageError.EXIT_CODE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
