"""Command-line interface for fastga-bench.

Subcommands:
- run: a batch of seeded runs of one algorithm on one problem
- sweep: several experiments from a JSON configuration file
- bounds: table cells and constants for given (beta, u, n, d)
- probe: Monte-Carlo estimate of the one-iteration improvement probability
- instance: write a planted MAX-3SAT instance as DIMACS
"""

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .bounds import (
    expected_lambda_class,
    expected_lambda_exact,
    iteration_leading_constant,
    leading_constant,
    lower_bound_iterations,
    progress_bound,
    runtime_bound,
)
from .harness.experiment import ExperimentResult, ExperimentRunner, build_controller
from .harness.output_layout import OutputLayout
from .harness.probe import estimate_progress_probability
from .models.experiment_config import AlgorithmSpec, SweepConfig, validate_experiment
from .models.run_record import SummaryRow
from .problems.dimacs import write_dimacs
from .problems.maxsat import generate_sat_instance

logger = logging.getLogger(__name__)

ALGORITHMS = (
    "rls",
    "opo-ea",
    "ollga-static",
    "ollga-fitdep",
    "ollga-onefifth",
    "ollga-fast",
)


def configure_logging(verbose: bool) -> None:
    """Send log records to stderr; DEBUG with --verbose, WARNING otherwise."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def parse_size(text: str) -> int:
    """Parse a problem size given as '65536' or '2^16'."""
    try:
        if "^" in text:
            base, exponent = text.split("^", 1)
            value = int(base) ** int(exponent)
        else:
            value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid size: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"size must be positive: {text!r}")
    return value


def parse_u(text: str) -> str | int:
    """'n', '2ln' or a positive integer."""
    return text if text in ("n", "2ln") else parse_size(text)


def parse_cap(text: str) -> str | float:
    """'none', '2ln' or a number."""
    if text in ("none", "2ln"):
        return text
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid cap: {text!r}") from None


def parse_budget(text: str) -> str | int:
    """'unlimited' or a positive integer."""
    return text if text == "unlimited" else parse_size(text)


def algorithm_spec_from_args(args: argparse.Namespace) -> dict[str, object]:
    """Collect the algorithm options of `args` into an AlgorithmSpec dict."""
    spec: dict[str, object] = {
        "name": args.algorithm,
        "beta": args.beta,
        "u": args.u,
        "cap": args.cap,
        "update_factor": args.update_factor,
        "success_on_equal": args.success_on_equal,
    }
    if args.lambda_value is not None:
        spec["lambda_value"] = args.lambda_value
    return spec


def format_summary(summaries: list[SummaryRow]) -> str:
    """Format summary rows as an aligned table.

    Args:
        summaries: Rows to show, in order.

    Returns:
        Formatted table string.
    """
    width = max([len(row.algorithm) for row in summaries] + [9])
    lines = []
    lines.append("=" * (width + 52))
    lines.append(
        f"{'algorithm':{width}s}  {'problem':7s} {'n':>8s} {'runs':>5s} "
        f"{'evals/n':>9s} {'std':>8s} {'iters':>10s}"
    )
    lines.append("-" * (width + 52))
    lines.extend(
        f"{row.algorithm:{width}s}  {row.problem:7s} {row.n:8d} {row.runs:5d} "
        f"{row.mean_evals_per_n:9.3f} {row.std_evals_per_n:8.3f} "
        f"{row.mean_iterations:10.1f}"
        for row in summaries
    )
    lines.append("=" * (width + 52))
    return "\n".join(lines)


def _report(
    result: ExperimentResult,
    out: Path | None,
    config_echo: dict[str, object],
    output_format: str,
) -> None:
    if out is not None:
        OutputLayout.write_results(out, result.records, result.summaries, config_echo)
        logger.info("Results written to %s", out.resolve())
    if output_format == "json":
        print(json.dumps([row.to_dict() for row in result.summaries], indent=2))
    else:
        print(format_summary(result.summaries))
    if result.failed_runs:
        print(
            f"Warning: {result.failed_runs} run(s) stopped by the evaluation limit",
            file=sys.stderr,
        )


def _fail(args: argparse.Namespace, e: BaseException) -> int:
    print(f"Error: {e}", file=sys.stderr)
    if getattr(args, "verbose", False):
        import traceback

        traceback.print_exc(file=sys.stderr)
    return 1


def cmd_run(args: argparse.Namespace, runner: ExperimentRunner) -> int:
    """Handle the run subcommand.

    Args:
        args: Parsed command-line arguments.
        runner: Experiment runner (dependency injection).

    Returns:
        Exit code (0 for success, 1 for error).
    """
    try:
        data: dict[str, object] = {
            "algorithm": algorithm_spec_from_args(args),
            "problem": args.problem,
            "sizes": args.n,
            "runs": args.runs,
            "base_seed": args.seed,
            "out": args.out,
        }
        if args.max_evaluations is not None:
            data["max_evaluations"] = args.max_evaluations
        config = validate_experiment(data)
        result = runner.run(config)
        _report(result, args.out, config.model_dump(mode="json"), args.format)
        return 0
    except Exception as e:
        return _fail(args, e)


def cmd_sweep(args: argparse.Namespace) -> int:
    """Handle the sweep subcommand.

    Command-line --out and --workers override the values of the file.
    """
    try:
        sweep = SweepConfig.from_file(args.config)
        out = args.out if args.out is not None else sweep.out
        workers = args.workers if args.workers is not None else sweep.workers
        record_wall_time = sweep.record_wall_time and not args.no_wall_time
        runner = ExperimentRunner(workers=workers, record_wall_time=record_wall_time)
        result = runner.run_many(sweep.experiments)
        _report(result, out, sweep.model_dump(mode="json"), args.format)
        return 0
    except Exception as e:
        return _fail(args, e)


def bounds_rows(
    beta: float, u: int, n: int, d: int | None
) -> list[tuple[str, str, str, str]]:
    """Compute the rows shown by the bounds subcommand.

    Returns:
        (quantity, expression, regime, value) tuples.
    """
    rows = [
        (
            "E[lambda]",
            str(expected_lambda_class(beta)),
            f"beta={beta:g}",
            f"{expected_lambda_exact(beta, u):.6g}",
        ),
        (
            "iterations lower bound",
            "n/(2E[lambda])",
            "any beta",
            f"{lower_bound_iterations(beta, u, n):.6g}",
        ),
    ]
    if d is not None:
        bound = progress_bound(beta, u, n, d)
        rows.append(
            (
                f"progress d={d}",
                bound.expression,
                str(bound.regime),
                f"{bound.value:.6g}",
            )
        )
    if n >= 3:
        ti, tf = runtime_bound(beta, u, n)
        rows.append(("T_I", ti.expression, str(ti.regime), f"{ti.value:.6g}"))
        rows.append(("T_F", tf.expression, str(tf.regime), f"{tf.value:.6g}"))
    if 2 < beta < 3:
        rows.append(
            (
                "evaluation constant",
                "328β(5−β)/((3−β)(β−2))",
                "beta in (2,3)",
                f"{leading_constant(beta):.6g}",
            )
        )
    if 1 < beta < 3:
        rows.append(
            (
                "iteration constant",
                "12β(5−β)/((3−β)(β−1)C')",
                "beta in (1,3)",
                f"{iteration_leading_constant(beta):.6g}",
            )
        )
    return rows


def cmd_bounds(args: argparse.Namespace) -> int:
    """Handle the bounds subcommand."""
    try:
        rows = bounds_rows(args.beta, args.u, args.n, args.d)
        if args.format == "csv":
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator="\n")
            writer.writerow(("quantity", "expression", "regime", "value"))
            writer.writerows(rows)
            print(buffer.getvalue(), end="")
        else:
            widths = [max(len(row[i]) for row in rows) for i in range(3)]
            for quantity, expression, regime, value in rows:
                print(
                    f"{quantity:{widths[0]}s}  {expression:{widths[1]}s}  "
                    f"{regime:{widths[2]}s}  {value}"
                )
        return 0
    except Exception as e:
        return _fail(args, e)


def cmd_probe(args: argparse.Namespace) -> int:
    """Handle the probe subcommand."""
    try:
        spec = AlgorithmSpec.model_validate(algorithm_spec_from_args(args))
        controller = build_controller(spec, args.n)
        estimate = estimate_progress_probability(
            args.n, args.d, controller, args.trials, np.random.default_rng(args.seed)
        )
        print(
            f"{spec.label()} n={args.n} d={args.d}: "
            f"p = {estimate.probability:.6f} ± {estimate.stderr:.6f} "
            f"({estimate.successes}/{estimate.trials})"
        )
        return 0
    except Exception as e:
        return _fail(args, e)


def cmd_instance(args: argparse.Namespace) -> int:
    """Handle the instance subcommand."""
    try:
        instance = generate_sat_instance(args.n, np.random.default_rng(args.seed))
        write_dimacs(
            instance,
            args.out,
            comment=f"planted 3-CNF n={args.n} seed={args.seed}",
        )
        print(f"Wrote {instance!r} to {args.out}")
        return 0
    except Exception as e:
        return _fail(args, e)


def _add_algorithm_options(parser: argparse.ArgumentParser, default: str) -> None:
    parser.add_argument(
        "--algorithm",
        choices=ALGORITHMS,
        default=default,
        help=f"Algorithm to run (default: {default})",
    )
    parser.add_argument(
        "--beta", type=float, default=2.5, help="Power-law exponent (default: 2.5)"
    )
    parser.add_argument(
        "--u",
        type=parse_u,
        default="n",
        help="Upper limit of lambda: n, 2ln or an integer (default: n)",
    )
    parser.add_argument(
        "--cap",
        type=parse_cap,
        default="none",
        help="One-fifth cap on lambda: none, 2ln or a number (default: none)",
    )
    parser.add_argument(
        "--update-factor",
        type=float,
        default=1.5,
        help="One-fifth update factor F (default: 1.5)",
    )
    parser.add_argument(
        "--lambda",
        dest="lambda_value",
        type=float,
        default=None,
        help="Static lambda (default: the asymptotically optimal value)",
    )
    parser.add_argument(
        "--success-on-equal",
        action="store_true",
        help="Count equal-fitness acceptance as a one-fifth success",
    )


def _add_verbose(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--verbose", action="store_true", help="Enable verbose output")


def create_parser() -> argparse.ArgumentParser:
    """Build the argument parser with all subcommands."""
    parser = argparse.ArgumentParser(
        prog="fastga-bench",
        description=(
            "Benchmark the (1+(lambda,lambda)) GA with heavy-tailed population "
            "sizes on OneMax and planted MAX-3SAT"
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    # Run command
    run_parser = subparsers.add_parser("run", help="Run a batch of seeded runs")
    _add_algorithm_options(run_parser, default="ollga-fast")
    run_parser.add_argument(
        "--problem",
        choices=["onemax", "maxsat"],
        default="onemax",
        help="Problem (default: onemax)",
    )
    run_parser.add_argument(
        "--n",
        type=parse_size,
        nargs="+",
        required=True,
        help="Problem sizes, e.g. 1024 2^14",
    )
    run_parser.add_argument(
        "--runs", type=int, default=100, help="Runs per size (default: 100)"
    )
    run_parser.add_argument(
        "--seed", type=int, default=0, help="64-bit base seed (default: 0)"
    )
    run_parser.add_argument(
        "--workers", type=int, default=1, help="Worker processes (default: 1)"
    )
    run_parser.add_argument(
        "--max-evaluations",
        type=parse_budget,
        default=None,
        help="Evaluation limit per run, or 'unlimited' (default: 10^4 n)",
    )
    run_parser.add_argument("--out", type=Path, default=None, help="Output directory")
    run_parser.add_argument(
        "--no-wall-time",
        action="store_true",
        help="Write wall_ms = 0 so that runs.csv is reproducible byte for byte",
    )
    run_parser.add_argument(
        "--format",
        choices=["summary", "json"],
        default="summary",
        help="Output format (default: summary)",
    )
    _add_verbose(run_parser)

    # Sweep command
    sweep_parser = subparsers.add_parser(
        "sweep", help="Run the experiments of a JSON configuration file"
    )
    sweep_parser.add_argument(
        "--config", type=Path, required=True, help="Path to the sweep file"
    )
    sweep_parser.add_argument(
        "--out", type=Path, default=None, help="Output directory (overrides file)"
    )
    sweep_parser.add_argument(
        "--workers", type=int, default=None, help="Worker processes (overrides file)"
    )
    sweep_parser.add_argument(
        "--no-wall-time", action="store_true", help="Write wall_ms = 0"
    )
    sweep_parser.add_argument(
        "--format",
        choices=["summary", "json"],
        default="summary",
        help="Output format (default: summary)",
    )
    _add_verbose(sweep_parser)

    # Bounds command
    bounds_parser = subparsers.add_parser(
        "bounds", help="Show progress and runtime bounds for given parameters"
    )
    bounds_parser.add_argument("--beta", type=float, required=True)
    bounds_parser.add_argument("--u", type=parse_size, required=True)
    bounds_parser.add_argument("--n", type=parse_size, required=True)
    bounds_parser.add_argument(
        "--d", type=int, default=None, help="Distance to the optimum"
    )
    bounds_parser.add_argument(
        "--format",
        choices=["text", "csv"],
        default="text",
        help="Output format (default: text)",
    )
    _add_verbose(bounds_parser)

    # Probe command
    probe_parser = subparsers.add_parser(
        "probe", help="Estimate the improvement probability at distance d"
    )
    _add_algorithm_options(probe_parser, default="ollga-fast")
    probe_parser.add_argument("--n", type=parse_size, required=True)
    probe_parser.add_argument("--d", type=int, required=True)
    probe_parser.add_argument(
        "--trials", type=int, default=10_000, help="Trials (default: 10000)"
    )
    probe_parser.add_argument("--seed", type=int, default=0, help="Seed (default: 0)")
    _add_verbose(probe_parser)

    # Instance command
    instance_parser = subparsers.add_parser(
        "instance", help="Write a planted MAX-3SAT instance in DIMACS format"
    )
    instance_parser.add_argument("--n", type=parse_size, required=True)
    instance_parser.add_argument("--seed", type=int, default=0)
    instance_parser.add_argument("--out", type=Path, required=True)
    _add_verbose(instance_parser)

    return parser


def main(argv: list[str] | None = None) -> int:
    """Main entry point for the CLI.

    Args:
        argv: Command-line arguments (defaults to sys.argv).

    Returns:
        Exit code (0 for success, 1 for error).
    """
    parser = create_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return 1

    configure_logging(args.verbose)

    if args.command == "run":
        if args.workers < 1:
            print("Error: --workers must be at least 1", file=sys.stderr)
            return 1
        runner = ExperimentRunner(
            workers=args.workers, record_wall_time=not args.no_wall_time
        )
        return cmd_run(args, runner)
    elif args.command == "sweep":
        return cmd_sweep(args)
    elif args.command == "bounds":
        return cmd_bounds(args)
    elif args.command == "probe":
        return cmd_probe(args)
    elif args.command == "instance":
        return cmd_instance(args)

    return 1


if __name__ == "__main__":
    sys.exit(main())
