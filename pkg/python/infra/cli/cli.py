"""Command-line entry point: simulate scenarios, analyze traces, run experiments."""

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from textwrap import dedent
from typing import cast

from pydantic import ValidationError

from python.config import CONFIG_FILE_ENV, Settings, set_settings
from python.domain.detect import ALL_DETECTORS, AnalysisError, ViolationKind, analyze
from python.domain.home import HomeError
from python.infra.engine import SimulationError
from python.infra.engine import run as simulate
from python.infra.experiments import ExperimentError, generate_scenario, run_experiment
from python.infra.persistence import (
    PersistenceError,
    load_relations,
    load_scenario,
    read_trace,
    write_report,
    write_series,
    write_trace,
)

logger = logging.getLogger(__name__)

_FAILURES = (
    HomeError,
    SimulationError,
    AnalysisError,
    ExperimentError,
    PersistenceError,
    ValidationError,
)


def _detectors(value: str) -> list[ViolationKind]:
    kinds = [part.strip().upper() for part in value.split(",") if part.strip()]
    unknown = [kind for kind in kinds if kind not in ALL_DETECTORS]
    if not kinds or unknown:
        raise argparse.ArgumentTypeError(f"detectors must be a subset of p1,p2,p3: {value}")
    return cast("list[ViolationKind]", list(dict.fromkeys(kinds)))


def _positive_int(value: str) -> int:
    try:
        number = int(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected an integer: {value}") from e
    if number < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1: {value}")
    return number


def _seed(value: str) -> int:
    try:
        number = int(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected an integer: {value}") from e
    if number < 0:
        raise argparse.ArgumentTypeError(f"seeds are non-negative: {value}")
    return number


def _period(value: str) -> float:
    try:
        period = float(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"period must be a number: {value}") from e
    if period <= 0:
        raise argparse.ArgumentTypeError(f"period must be positive: {value}")
    return period


def _periods(value: str) -> list[float]:
    try:
        periods = [float(part) for part in value.split(",") if part.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"periods must be numbers: {value}") from e
    if not periods or any(period <= 0 for period in periods):
        raise argparse.ArgumentTypeError(f"periods must be positive: {value}")
    return periods


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="misorder",
        description="Event and command misordering simulator for smart homes",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=dedent(
            f"""
            Examples:
              # Simulate a scenario file with seed 7
              misorder simulate --scenario home.yaml --seed 7 --out traces/

              # Simulate a built-in experiment scenario
              misorder simulate --exp 2 --period 0.5 --seed 3

              # Detect P1 and P3 violations in a trace
              misorder analyze --trace traces/home_seed7.jsonl --detectors p1,p3

              # Reproduce experiment 1 with 20 seeds over the default periods
              misorder experiment --exp 1 --seeds 20

            Environment Variables:
              {CONFIG_FILE_ENV}  Path to YAML config file (overridden by --config)
              MISORDER_OUTPUT_DIR    Default output directory (default: results)
              MISORDER_LOG_LEVEL     Logging level (DEBUG, INFO, WARNING, ERROR)
              MISORDER_N_EVENTS      Events per stream in experiments (default: 50)
              MISORDER_SEEDS         Seeds per experiment cell (default: 20)
              MISORDER_MAX_WORKERS   Concurrent experiment cells (default: 4)
              MISORDER_RATE_MODE     adjacent, any or state (default: adjacent)
            """
        ).strip(),
    )
    parser.add_argument(
        "--config",
        "-c",
        type=str,
        help=f"Path to YAML configuration file (overrides {CONFIG_FILE_ENV})",
    )
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help="Logging level (overrides the configured level)",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    sim = commands.add_parser("simulate", help="Run one scenario and write its trace")
    source = sim.add_mutually_exclusive_group(required=True)
    source.add_argument("--scenario", type=Path, help="Scenario file (YAML or JSON)")
    source.add_argument("--exp", type=int, choices=[1, 2, 3], help="Built-in experiment")
    sim.add_argument(
        "--period", type=_period, default=0.25, help="Period for --exp scenarios (default: 0.25)"
    )
    sim.add_argument("--seed", type=_seed, help="Seed (default: the scenario's seed, else 0)")
    sim.add_argument("--out", type=Path, help="Output directory (default: settings output_dir)")

    ana = commands.add_parser("analyze", help="Detect misordering in a trace")
    ana.add_argument("--trace", type=Path, required=True, help="Trace file (.jsonl)")
    ana.add_argument(
        "--detectors",
        type=_detectors,
        default=list(ALL_DETECTORS),
        help="Comma-separated detectors (default: p1,p2,p3)",
    )
    ana.add_argument(
        "--relations", type=Path, help="Temporal relations file (default: the scenario's)"
    )
    ana.add_argument("--rate-mode", choices=["adjacent", "any", "state"], help="Rate counting mode")
    ana.add_argument("--out", type=Path, help="Output directory (default: the trace's)")

    exp = commands.add_parser("experiment", help="Run an experiment over periods and seeds")
    exp.add_argument("--exp", type=int, choices=[1, 2, 3], required=True, help="Experiment")
    exp.add_argument("--seeds", type=_positive_int, help="Number of seeds (default: 20)")
    exp.add_argument(
        "--periods", type=_periods, help="Comma-separated periods (default: 0.25,...,2.0)"
    )
    exp.add_argument("--n-events", type=_positive_int, help="Events per stream (default: 50)")
    exp.add_argument("--workers", type=_positive_int, help="Concurrent cells (default: 4)")
    exp.add_argument("--rate-mode", choices=["adjacent", "any", "state"], help="Rate counting mode")
    exp.add_argument("--out", type=Path, help="Output directory (default: settings output_dir)")
    return parser


def cmd_simulate(args: argparse.Namespace, settings: Settings) -> int:
    if args.scenario is not None:
        scenario = load_scenario(args.scenario)
        if args.seed is not None:
            scenario = scenario.model_copy(update={"seed": args.seed})
    else:
        scenario = generate_scenario(args.exp, args.period, args.seed or 0, settings.n_events)
    out_dir: Path = args.out or settings.output_dir
    trace = simulate(scenario)
    path = write_trace(trace, out_dir / f"{scenario.name}_seed{scenario.seed}.jsonl")
    print(path)
    return 0


def cmd_analyze(args: argparse.Namespace, settings: Settings) -> int:
    trace = read_trace(args.trace)
    relations = load_relations(args.relations) if args.relations is not None else None
    report = analyze(trace, args.detectors, relations, args.rate_mode or settings.rate_mode)
    out_dir: Path = args.out or args.trace.parent
    write_report(report, out_dir / "report.json", "json")
    write_report(report, out_dir / "report.csv", "csv")
    for kind, found in report.violations.items():
        print(f"{kind}: {len(found)} violations")
    return 0


def cmd_experiment(args: argparse.Namespace, settings: Settings) -> int:
    if args.workers is not None:
        settings = settings.model_copy(update={"max_workers": args.workers})
        set_settings(settings)
    seeds = list(range(args.seeds)) if args.seeds is not None else None
    stats = run_experiment(
        args.exp,
        seeds,
        args.periods,
        n_events=args.n_events,
        mode=args.rate_mode,
        settings=settings,
    )
    out_dir: Path = args.out or settings.output_dir
    for path in (
        write_report(stats, out_dir / f"exp{args.exp}_stats.csv", "csv"),
        write_report(stats, out_dir / f"exp{args.exp}_stats.json", "json"),
        write_series(stats, out_dir / f"exp{args.exp}_series.json"),
    ):
        print(path)
    return 0


_COMMANDS = {
    "simulate": cmd_simulate,
    "analyze": cmd_analyze,
    "experiment": cmd_experiment,
}


def main(argv: Sequence[str] | None = None) -> int:
    """Main CLI entry point; returns the process exit code."""
    args = build_parser().parse_args(argv)

    try:
        settings = Settings.load(config_file=args.config)
    except (ValidationError, ValueError) as e:
        # Print to stderr before logging is configured
        print(f"Error loading configuration: {e}", file=sys.stderr)
        return 1
    if args.log_level:
        settings = settings.model_copy(update={"log_level": args.log_level})

    set_settings(settings)
    logger.debug(f"Running {args.command} with {settings.app_name}")

    try:
        return _COMMANDS[args.command](args, settings)
    except _FAILURES as e:
        print(f"Error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
