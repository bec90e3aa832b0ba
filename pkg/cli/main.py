"""
``tnqc`` command-line entry point.

Exit codes: 0 on success, 2 on invalid input (arguments, config files,
layouts, graphs, images, model files), 1 on any other failure.
"""

import argparse
import logging
import os
import sys
from typing import Dict, List, Optional

from core.config import ConfigManager
from core.exceptions import (
    AnsatzError,
    ConfigurationError,
    DetectionError,
    FileError,
    LibraryError,
    TensorNetworkError,
    ValidationError
)
from core.logging import LogManager
from services.cutting import SWEEPS
from services.training import LOSS_FUNCTIONS
from utils.console import ConsoleService
from .commands import COMMANDS, int_list
from .run_config import RunConfig

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2

USER_ERRORS = (AnsatzError, ConfigurationError, DetectionError, FileError, TensorNetworkError, ValidationError)

# Options a command needs, from the command line or the run config
REQUIRED = {
    "bas-gen": ("out",),
    "train": ("out",),
    "cut-run": ("n",),
    "bench": ("sweep", "out"),
    "detect": ("image", "models"),
    "tn2circ": ("graph",),
}

logger = logging.getLogger(__name__)


def _add_layout_args(parser: argparse.ArgumentParser, n_default: Optional[int] = None) -> None:
    parser.add_argument("--layout", choices=("mps", "ttn"), default="mps", help="Meta-ansatz kind")
    parser.add_argument("--n", type=int, default=n_default, help="Number of qubits")
    parser.add_argument("--nv", type=int, default=1, help="Bond qubits shared between blocks")
    parser.add_argument("--block-qubits", type=int, default=None, help="Qubits per block (default 2*nv)")
    parser.add_argument("--layers", type=int, default=1, help="Entangling layers per block")
    parser.add_argument("--entangling-range", type=int, default=1, help="CNOT ring range")
    parser.add_argument("--share-weights", action="store_true", help="All blocks share one weight tensor")


def build_parser() -> Dict[str, argparse.ArgumentParser]:
    """The top-level parser under key "" and one parser per subcommand."""
    parser = argparse.ArgumentParser(prog="tnqc", description="Tensor-network quantum circuit toolkit")
    parser.add_argument("--config", help="Run config file of 'key = value' lines")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")
    parser.add_argument("--json", action="store_true", help="Print only the JSON result")
    subparsers = parser.add_subparsers(dest="command", help="Command to run")
    parsers = {"": parser}

    # bas-gen
    p = subparsers.add_parser("bas-gen", help="Write a bars-and-stripes dataset as PGM files")
    p.add_argument("--size", type=int, default=4, help="Image side")
    p.add_argument("--seed", type=int, default=0, help="Train/test split seed")
    p.add_argument("--out", help="Output directory")
    p.add_argument("--ascii", action="store_true", help="Write P2 instead of P5 files")
    parsers["bas-gen"] = p

    # train
    p = subparsers.add_parser("train", help="Train a classifier with SPSA")
    _add_layout_args(p, n_default=4)
    p.add_argument("--data", help="Image directory with labels.tsv (default: generated BAS)")
    p.add_argument("--bas-size", type=int, default=4, help="BAS side when --data is not given")
    p.add_argument("--iters", type=int, default=None, help="SPSA iterations")
    p.add_argument("--seed", type=int, default=0, help="Run seed")
    p.add_argument("--shots", type=int, default=None, help="Estimate <Z> from samples")
    p.add_argument("--loss", choices=sorted(LOSS_FUNCTIONS), default=None, help="Loss function")
    p.add_argument("--stop-at", type=float, default=None, help="Stop at this train accuracy")
    p.add_argument("--bias", type=float, default=None, help="Bias amplitude appended to inputs")
    p.add_argument("--out", help="Checkpoint JSON path")
    p.add_argument("--metrics", help="Metrics JSONL path (default: next to the checkpoint)")
    parsers["train"] = p

    # cut-run
    p = subparsers.add_parser("cut-run", help="Cut, evaluate and reconstruct a random ansatz circuit")
    _add_layout_args(p)
    p.add_argument("--seed", type=int, default=0, help="Parameter and sampling seed")
    p.add_argument("--shots", type=int, default=None, help="Shots per fragment setting")
    p.add_argument("--workers", type=int, default=None, help="Fragment worker threads")
    p.add_argument("--out", help="Also write the report to this JSON file")
    parsers["cut-run"] = p

    # bench
    p = subparsers.add_parser("bench", help="Sweep cut MPS sizes and record settings and wall time")
    p.add_argument("--sweep", choices=SWEEPS, help="Parameter to sweep")
    p.add_argument("--n", type=int, default=10, help="Qubits for bond and block sweeps")
    p.add_argument("--nv", type=int, default=1, help="Bond qubits for qubit and block sweeps")
    p.add_argument("--block-qubits", type=int, default=None,
                   help="Block width for bond and qubit sweeps (default 4 and 5)")
    p.add_argument("--nv-values", type=int_list, default=[1, 2, 3], help="Bond sweep values")
    p.add_argument("--n-values", type=int_list, default=[9, 13, 17, 21, 25], help="Qubit sweep values")
    p.add_argument("--b-values", type=int_list, default=[2, 3, 4, 5, 6], help="Block sweep values")
    p.add_argument("--seed", type=int, default=0, help="Parameter seed")
    p.add_argument("--workers", type=int, default=None, help="Fragment worker threads")
    p.add_argument("--count-only", action="store_true", help="Skip the timed runs")
    p.add_argument("--out", help="CSV path")
    parsers["bench"] = p

    # detect
    p = subparsers.add_parser("detect", help="Three-stage sliding-window defect detection")
    p.add_argument("--image", help="PGM image")
    p.add_argument("--models", help="coarse,window,fine checkpoint paths")
    p.add_argument("--threshold", type=float, default=None, help="Black threshold for highlighting")
    p.add_argument("--out", help="report.json[,highlight.ppm]")
    p.add_argument("--coarse-side", type=int, default=None, help="Center crop side")
    p.add_argument("--window", type=int, default=None, help="Coarse window side")
    p.add_argument("--fine-window", type=int, default=None, help="Fine window side")
    p.add_argument("--window-stride", type=int, default=None, help="Coarse window stride")
    p.add_argument("--fine-stride", type=int, default=None, help="Fine window stride")
    parsers["detect"] = p

    # tn2circ
    p = subparsers.add_parser("tn2circ", help="Lay out a tensor-network graph as a block circuit")
    p.add_argument("--graph", help="Graph text file")
    p.add_argument("--directions", default=None, help="label=in|out,...; '*' sets the rest")
    p.add_argument("--merge", action="store_true", help="Fold leading source blocks")
    p.add_argument("--out", help="Layout text path (default: print)")
    parsers["tn2circ"] = p

    return parsers


def _parse(argv: List[str]) -> argparse.Namespace:
    parsers = build_parser()
    args = parsers[""].parse_args(argv)
    if args.config and args.command:
        sub = parsers[args.command]
        sub.set_defaults(**RunConfig.load(args.config).defaults_for(sub))
        args = parsers[""].parse_args(argv)
    if args.command:
        missing = [f"--{key.replace('_', '-')}" for key in REQUIRED[args.command] if getattr(args, key) is None]
        if missing:
            parsers[args.command].error(f"the following arguments are required: {', '.join(missing)}")
    return args


def _configure_logging(config: ConfigManager, level: Optional[str]) -> None:
    if level:
        config.set("logging.level", level.upper())
    resolved = LogManager.resolve_level(config.get("logging.level"))
    logging.basicConfig(level=resolved, format=config.get("logging.format", LogManager.DEFAULT_FORMAT),
                        stream=sys.stderr)
    logging.getLogger().setLevel(resolved)
    LogManager.set_level(resolved)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one command.

    Returns:
        int: Process exit code.
    """
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = _parse(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    except ConfigurationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    if not args.command:
        build_parser()[""].print_help()
        return EXIT_USAGE

    try:
        config = ConfigManager(os.environ.get("TNQC_CONFIG_DIR"))
        config.load_from_env()
        _configure_logging(config, args.log_level)
        console = ConsoleService(config, json_only=args.json)
    except LibraryError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    try:
        document = COMMANDS[args.command](args, config, console)
    except USER_ERRORS as e:
        console.error(str(e))
        return EXIT_USAGE
    except Exception as e:
        logger.exception("Command %s failed", args.command)
        console.error(f"internal error: {e}")
        return EXIT_INTERNAL

    console.print_json(document)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
