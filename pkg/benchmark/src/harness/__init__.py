"""Experiment orchestration: seeding, batches of runs, statistics and output."""

from .csv_io import (
    format_runs_csv,
    format_summary_csv,
    parse_runs_csv,
    parse_summary_csv,
    read_runs_csv,
    read_summary_csv,
)
from .experiment import (
    ExperimentResult,
    ExperimentRunner,
    RunTask,
    build_controller,
    build_problem,
    execute_run,
    plan_tasks,
    run_experiment,
)
from .output_layout import OutputLayout
from .probe import ProgressEstimate, estimate_progress_probability
from .seeding import derive_seed, run_streams
from .statistics import summarize

__all__ = [
    "derive_seed",
    "run_streams",
    "summarize",
    "format_runs_csv",
    "format_summary_csv",
    "parse_runs_csv",
    "parse_summary_csv",
    "read_runs_csv",
    "read_summary_csv",
    "OutputLayout",
    "RunTask",
    "execute_run",
    "plan_tasks",
    "build_controller",
    "build_problem",
    "ExperimentResult",
    "ExperimentRunner",
    "run_experiment",
    "ProgressEstimate",
    "estimate_progress_probability",
]
