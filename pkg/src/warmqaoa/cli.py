"""
Command-line interface for warmqaoa.

This module provides the experiment harness: instance generation,
warm-start construction, QAOA runs, spectral checks, p=1 sweeps and
result summaries. Exit codes: 0 ok, 2 argument error, 3 numerical or
strictness failure, 4 capacity exceeded, 130 interrupted.
"""

import argparse
import json
import logging
import math
import sys
import traceback
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from .config import build_config, load_config
from .config.models import ConfigurationError, ExperimentSpec
from .config.settings import Settings
from .config.template import STARTER_CONFIG
from .core.formatter import format_number, rows_from_csv, rows_to_csv
from .core.report import karloff_table, summarize, summary_to_yaml
from .core.runner import ExperimentRunner
from .errors import (
    CapacityError,
    DegenerateInstanceError,
    EdgeListParseError,
    InvalidArgumentError,
    NumericalError,
    WarmQaoaError,
)
from .fs.handler import (
    DryRunFileHandler,
    FileHandler,
    FileSystemError,
    InteractiveFileHandler,
    SilentFileHandler,
)
from .graphs.edgelist import read_graph, serialize_edge_list
from .graphs.generators import (
    WeightLaw,
    generate_erdos_renyi,
    generate_karloff,
    karloff_gw_ratio,
)
from .graphs.models import WeightedGraph
from .optimizer.ascent import sweep_grid
from .simulator.models import MixerSpec, QaoaParams
from .simulator.spectral import spectrum_profile
from .simulator.statevector import cost_diagonal, run_qaoa
from .utils.logging import configure_logging
from .utils.seeding import derive_seed
from .warmstart.bloch import random_bloch_angles
from .warmstart.models import BlochAngles
from .warmstart.selection import select_warmstart

EXIT_OK = 0
EXIT_ARGUMENT = 2
EXIT_NUMERICAL = 3
EXIT_CAPACITY = 4
EXIT_INTERRUPTED = 130

CONFIG_FILENAME = "warmqaoa.yaml"
_INIT_STREAM = 3_000_000


def setup_logging(verbose: bool = False) -> None:
    """
    Configure logging based on verbosity level.

    Args:
        verbose: Whether to enable debug logging.
    """
    configure_logging(logging.DEBUG if verbose else logging.INFO)


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-v", "--verbose", action="store_true", help="Enable verbose output"
    )
    common.add_argument(
        "--dry-run",
        action="store_true",
        help="Show what would be written without writing it",
    )
    common.add_argument(
        "-y", "--yes", action="store_true", help="Overwrite files without prompting"
    )
    common.add_argument("--out", type=str, help="Output file (default: stdout)")
    return common


def _warmstart_options() -> argparse.ArgumentParser:
    options = argparse.ArgumentParser(add_help=False)
    options.add_argument("--method", choices=("bm", "gw_projected"), default="bm")
    options.add_argument("--rank", type=int, choices=(2, 3), default=2)
    options.add_argument(
        "--rotation", choices=("uniform", "vertex"), default="vertex"
    )
    options.add_argument("--attempts", type=int, default=5)
    options.add_argument("--seed", type=int, default=0)
    return options


def _instance_options() -> argparse.ArgumentParser:
    options = argparse.ArgumentParser(add_help=False)
    options.add_argument("--instance", type=str, help="Edge-list instance file")
    options.add_argument(
        "--one-indexed",
        action="store_true",
        help="Instance vertices are numbered from 1",
    )
    return options


def create_parser() -> argparse.ArgumentParser:
    """
    Create the command-line argument parser.

    Returns:
        ArgumentParser: Configured argument parser.
    """
    parser = argparse.ArgumentParser(
        description="warmqaoa - Warm-started QAOA for Max-Cut with custom mixers"
    )
    common = _common_options()
    instance = _instance_options()
    warm = _warmstart_options()

    subparsers = parser.add_subparsers(dest="command", help="Command to execute")

    # Init command
    init_parser = subparsers.add_parser(
        "init", help="Generate a starter experiment configuration"
    )
    init_parser.add_argument(
        "-f",
        "--force",
        action="store_true",
        help="Overwrite existing configuration file",
    )

    # Generate command
    generate_parser = subparsers.add_parser("generate", help="Generate an instance")
    kinds = generate_parser.add_subparsers(dest="kind", required=True)
    er_parser = kinds.add_parser("er", parents=[common], help="Erdős–Rényi G(n, p)")
    er_parser.add_argument("--n", type=int, required=True)
    er_parser.add_argument("--p", type=float, required=True)
    er_parser.add_argument("--weights", type=str, default="unit")
    er_parser.add_argument("--seed", type=int, default=0)
    karloff_parser = kinds.add_parser(
        "karloff", parents=[common], help="Karloff instance J(m, t, b)"
    )
    karloff_parser.add_argument("--m", type=int, required=True)
    karloff_parser.add_argument("--t", type=int, help="Subset size (default m/2)")
    karloff_parser.add_argument("--b", type=int, required=True)

    # Warmstart command
    warmstart_parser = subparsers.add_parser(
        "warmstart",
        parents=[common, instance, warm],
        help="Build warm-started initial states",
    )
    warmstart_parser.add_argument("--rotations-per-solution", type=int, default=5)
    warmstart_parser.add_argument(
        "--angles-out", type=str, help="Write the Bloch angles as JSON"
    )
    warmstart_parser.add_argument(
        "--strict",
        action="store_true",
        help="Fail (exit 3) if the relaxation solver did not reach stationarity",
    )

    # Run command
    run_parser = subparsers.add_parser(
        "run", parents=[common, instance], help="Run a QAOA experiment"
    )
    run_parser.add_argument("-c", "--config", type=str, help="Experiment YAML file")
    run_parser.add_argument("--variant", type=str, help="Comma-separated variants")
    run_parser.add_argument("--method", choices=("bm", "gw_projected"))
    run_parser.add_argument("--rank", type=str, help="Comma-separated ranks")
    run_parser.add_argument("--rotation", type=str, help="Comma-separated rotations")
    run_parser.add_argument("--attempts", type=int)
    run_parser.add_argument("--depths", type=str, help="Comma-separated depths")
    run_parser.add_argument("--seed", type=str, help="Comma-separated seeds")
    run_parser.add_argument("--starts", type=int)
    run_parser.add_argument("--noise-q", type=float)
    run_parser.add_argument(
        "--no-timing",
        action="store_true",
        help="Leave wall_ms empty for byte-identical output",
    )
    run_parser.add_argument(
        "--trace",
        type=str,
        help="Write every optimizer result with its F_p trace as JSON",
    )

    # Spectrum command
    spectrum_parser = subparsers.add_parser(
        "spectrum",
        parents=[common, instance, warm],
        help="Gap, stoquasticity and irreducibility of H(t)",
    )
    spectrum_parser.add_argument(
        "--init", choices=("standard", "warm", "random"), default="standard"
    )
    spectrum_parser.add_argument("--t-points", type=int, default=11)

    # Sweep command
    sweep_parser = subparsers.add_parser(
        "sweep", parents=[common, instance, warm], help="Grid scan of F_1(γ, β)"
    )
    sweep_parser.add_argument(
        "--init", choices=("standard", "warm", "warmest", "random"), default="warmest"
    )
    sweep_parser.add_argument("--resolution", type=int, default=21)
    sweep_parser.add_argument("--gamma-max", type=float, default=math.pi)
    sweep_parser.add_argument("--beta-max", type=float, default=math.pi)
    sweep_parser.add_argument(
        "--dump-state",
        type=str,
        help="Write the statevector at the best grid point (float64 re/im pairs)",
    )

    # Report command
    report_parser = subparsers.add_parser(
        "report", parents=[common], help="Summarize result CSVs as YAML"
    )
    report_parser.add_argument("results", nargs="+", help="Result CSV files")
    report_parser.add_argument("--tie-margin", type=float, default=0.01)

    # Karloff table command
    table_parser = subparsers.add_parser(
        "karloff-table", parents=[common], help="Karloff instance properties"
    )
    table_parser.add_argument(
        "--pairs",
        type=str,
        default="6:1,8:1,10:1,10:2",
        help="Comma-separated m:b pairs",
    )

    return parser


def select_handler(args: argparse.Namespace) -> FileHandler:
    """Pick the output writer for the dry-run / yes flags."""
    if getattr(args, "dry_run", False):
        return DryRunFileHandler()
    if getattr(args, "yes", False):
        return SilentFileHandler()
    return InteractiveFileHandler()


def emit(args: argparse.Namespace, content: str) -> None:
    """Write ``content`` to ``--out`` or stdout."""
    if args.out:
        select_handler(args).create(Path(args.out), content)
    else:
        sys.stdout.write(content)


def init_config(force: bool = False) -> int:
    """
    Generate a starter configuration file.

    Args:
        force: Whether to overwrite existing configuration.

    Returns:
        int: Exit code (0 for success, non-zero for error).
    """
    config_path = Path(CONFIG_FILENAME)
    if config_path.exists() and not force:
        logging.error("Configuration file already exists. Use -f to overwrite.")
        return 1

    try:
        config_path.write_text(STARTER_CONFIG, encoding="utf-8")
        logging.info("Created configuration file: %s", config_path)
        return EXIT_OK
    except OSError as e:
        logging.error("Error creating configuration file: %s", e)
        return 1


def _require_instance(args: argparse.Namespace) -> WeightedGraph:
    if not args.instance:
        raise InvalidArgumentError("--instance is required")
    return read_graph(args.instance, one_indexed=args.one_indexed)


def _rotation_name(rotation: str) -> str:
    return "vertex_at_top" if rotation == "vertex" else rotation


def cmd_generate(args: argparse.Namespace, settings: Settings) -> int:
    """Generate an instance and print its size (and the GW ratio for Karloff)."""
    if args.kind == "er":
        graph = generate_erdos_renyi(
            args.n, args.p, WeightLaw.parse(args.weights), seed=args.seed
        )
        summary = f"n={graph.n} m={graph.m}"
    else:
        t = args.t if args.t is not None else args.m // 2
        graph = generate_karloff(args.m, t, args.b, settings)
        summary = f"n={graph.n} m={graph.m}"
        if t == args.m // 2 and 0 <= args.b < args.m / 4:
            summary += f" gw_ratio={karloff_gw_ratio(args.m, args.b):.4f}"
    emit(args, serialize_edge_list(graph))
    logging.info("%s", summary)
    return EXIT_OK


def cmd_warmstart(args: argparse.Namespace, settings: Settings) -> int:
    """Run warm-start selection and write the report and Bloch angles."""
    graph = _require_instance(args)
    states, report = select_warmstart(
        graph,
        method=args.method,
        k=args.rank,
        attempts=args.attempts,
        rotation=_rotation_name(args.rotation),
        rotations_per_solution=args.rotations_per_solution,
        seed=args.seed,
    )
    emit(args, json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n")
    if args.angles_out:
        angles = json.dumps([s.to_dict() for s in states], indent=2) + "\n"
        select_handler(args).create(Path(args.angles_out), angles)
    if args.strict and not report.stationary:
        raise NumericalError("relaxation solver did not reach a stationary point")
    return EXIT_OK


def _experiment_overrides(args: argparse.Namespace) -> Dict[str, Any]:
    return {
        "instance": args.instance,
        "variants": args.variant,
        "method": args.method,
        "ranks": args.rank,
        "rotations": args.rotation,
        "attempts": args.attempts,
        "depths": args.depths,
        "seeds": args.seed,
        "starts": args.starts,
        "noise_q": args.noise_q,
        "one_indexed": args.one_indexed or None,
        "output": args.out,
    }


def cmd_run(args: argparse.Namespace, settings: Settings) -> int:
    """Run an experiment and write its result CSV."""
    overrides = _experiment_overrides(args)
    spec: ExperimentSpec
    if args.config:
        spec = load_config(args.config, overrides)
    else:
        spec = build_config({}, overrides)
    runner = ExperimentRunner(spec, settings, timing=not args.no_timing)
    rows = runner.run()
    args.out = spec.output
    emit(args, rows_to_csv(rows))
    if args.trace:
        records = [
            {**context, **result.to_dict(include_trace=True)}
            for context, result in runner.optimizations
        ]
        select_handler(args).create(
            Path(args.trace), json.dumps(records, indent=2, sort_keys=True) + "\n"
        )
    failed = sum(1 for row in rows if row.error)
    if failed:
        logging.warning("%d of %d rows failed", failed, len(rows))
    return EXIT_OK


def _initial_state(
    args: argparse.Namespace, graph: WeightedGraph, init: str
) -> Tuple[BlochAngles, MixerSpec]:
    if init == "standard":
        return BlochAngles.uniform_superposition(graph.n), MixerSpec.standard(graph.n)
    if init == "random":
        s = random_bloch_angles(graph.n, seed=derive_seed(args.seed, _INIT_STREAM))
        return s, MixerSpec.from_state(s)
    states, _ = select_warmstart(
        graph,
        method=args.method,
        k=args.rank,
        attempts=args.attempts,
        rotation=_rotation_name(args.rotation),
        rotations_per_solution=1,
        seed=args.seed,
    )
    s = states[0]
    if init == "warm":
        return s, MixerSpec.standard(graph.n)
    return s, MixerSpec.from_state(s)


def cmd_spectrum(args: argparse.Namespace, settings: Settings) -> int:
    """Report spectral checks of H(t) on a uniform t-grid."""
    if args.t_points < 2:
        raise InvalidArgumentError("--t-points must be >= 2")
    graph = _require_instance(args)
    if graph.n > settings.dense_cap:
        raise CapacityError(
            f"dense matrices limited to n <= {settings.dense_cap}, got n={graph.n}"
        )
    # the warm-started mixer is the custom one for spectral checks
    init = "warmest" if args.init == "warm" else args.init
    s, mixer = _initial_state(args, graph, init)
    points = spectrum_profile(
        mixer,
        cost_diagonal(graph, settings),
        np.linspace(0.0, 1.0, args.t_points),
        settings,
    )
    report = {
        "n": graph.n,
        "init": args.init,
        "theta": s.theta.tolist(),
        "phi": s.phi.tolist(),
        "points": [point.to_dict() for point in points],
    }
    emit(args, json.dumps(report, indent=2) + "\n")
    return EXIT_OK


def _grid_csv(gammas: np.ndarray, betas: np.ndarray, values: np.ndarray) -> str:
    lines = [",".join(["beta\\gamma"] + [format_number(g) for g in gammas])]
    for beta, row in zip(betas, values):
        lines.append(",".join([format_number(beta)] + [format_number(v) for v in row]))
    return "\n".join(lines) + "\n"


def cmd_sweep(args: argparse.Namespace, settings: Settings) -> int:
    """Write F_1 on a (β, γ) grid, rows indexed by β and columns by γ."""
    graph = _require_instance(args)
    s, mixer = _initial_state(args, graph, args.init)
    grid = sweep_grid(
        graph,
        s,
        mixer,
        gamma_range=(0.0, args.gamma_max),
        beta_range=(0.0, args.beta_max),
        resolution=args.resolution,
        settings=settings,
    )
    emit(args, _grid_csv(grid.gammas, grid.betas, grid.values))
    gamma, beta, value = grid.best()
    logging.info("Best grid point: gamma=%.6f beta=%.6f F_1=%.10g", gamma, beta, value)
    if args.dump_state:
        state = run_qaoa(graph, s, mixer, QaoaParams((gamma,), (beta,)), settings)
        select_handler(args).create(Path(args.dump_state), state.to_bytes())
    return EXIT_OK


def cmd_report(args: argparse.Namespace, settings: Settings) -> int:
    """Summarize one or more result CSVs."""
    rows = []
    for name in args.results:
        path = Path(name)
        if not path.exists():
            raise InvalidArgumentError(f"results file not found: {path}")
        try:
            rows.extend(rows_from_csv(path.read_text(encoding="utf-8")))
        except (ValueError, KeyError) as e:
            raise InvalidArgumentError(f"{path}: {e}") from e
    emit(args, summary_to_yaml(summarize(rows, args.tie_margin)))
    return EXIT_OK


def _parse_pairs(text: str) -> List[Tuple[int, int]]:
    pairs = []
    for item in text.split(","):
        try:
            m, b = item.split(":")
            pairs.append((int(m), int(b)))
        except ValueError as e:
            raise InvalidArgumentError(f"invalid m:b pair {item!r}") from e
    return pairs


def cmd_karloff_table(args: argparse.Namespace, settings: Settings) -> int:
    """Print nodes, edges, degree, GW ratio and β_1 for each (m, b)."""
    table = karloff_table(_parse_pairs(args.pairs))
    lines = ["m,b,nodes,edges,degree,gw_ratio,beta_1"]
    for entry in table:
        lines.append(
            f"{entry['m']},{entry['b']},{entry['nodes']},{entry['edges']},"
            f"{entry['degree']},{entry['gw_ratio']:.4f},{entry['beta_1']:g}"
        )
    emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace, Settings], int]] = {
    "generate": cmd_generate,
    "warmstart": cmd_warmstart,
    "run": cmd_run,
    "spectrum": cmd_spectrum,
    "sweep": cmd_sweep,
    "report": cmd_report,
    "karloff-table": cmd_karloff_table,
}


def dispatch(args: argparse.Namespace) -> int:
    """
    Run a parsed command and map errors onto exit codes.

    Returns:
        int: Exit code.
    """
    verbose = getattr(args, "verbose", False)
    try:
        settings = Settings.from_env()
        return COMMANDS[args.command](args, settings)
    except (InvalidArgumentError, ConfigurationError, EdgeListParseError) as e:
        logging.error("Invalid argument: %s", e)
        return EXIT_ARGUMENT
    except (NumericalError, DegenerateInstanceError) as e:
        logging.error("Numerical failure: %s", e)
        return EXIT_NUMERICAL
    except CapacityError as e:
        logging.error("Capacity exceeded: %s", e)
        return EXIT_CAPACITY
    except KeyboardInterrupt:
        logging.error("\nOperation cancelled by user")
        return EXIT_INTERRUPTED
    except FileSystemError as e:
        logging.error("File system error: %s", e)
        if verbose:
            traceback.print_exc()
        return 1
    except WarmQaoaError as e:
        logging.error("Error: %s", e)
        if verbose:
            traceback.print_exc()
        return 1


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main entry point for the CLI.

    Returns:
        int: Exit code (0 for success, non-zero for error).
    """
    parser = create_parser()
    args = parser.parse_args(argv)

    # Configure logging
    setup_logging(getattr(args, "verbose", False))

    # Handle commands
    if args.command == "init":
        return init_config(args.force)
    if args.command in COMMANDS:
        return dispatch(args)

    parser.print_help()
    return 1


if __name__ == "__main__":
    sys.exit(main())
