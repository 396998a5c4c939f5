"""Batches of seeded, independent optimization runs.

Each run is described by a picklable RunTask and executed by `execute_run`,
in-process or in a pool of worker processes. Results are sorted by
(algorithm, n, run) before aggregation, so the output does not depend on the
number of workers or the completion order.
"""

import dataclasses
import functools
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from ..algorithms.baselines import run_one_plus_one_ea, run_rls
from ..algorithms.controllers import (
    FitnessDependentController,
    HeavyTailedController,
    LambdaController,
    OneFifthController,
    StaticController,
    optimal_static_lambda,
)
from ..algorithms.ollga import run_ollga
from ..models.experiment_config import AlgorithmSpec, ExperimentConfig, ProblemName
from ..models.run_record import RunBudget, RunRecord, SummaryRow
from ..problems.base_problem import Problem
from ..problems.maxsat import MaxSatProblem, generate_sat_instance
from ..problems.onemax import OneMaxProblem
from ..sampling.power_law import PowerLawDist, build_power_law
from .seeding import derive_seed, run_streams
from .statistics import summarize

logger = logging.getLogger(__name__)


@functools.lru_cache(maxsize=64)
def cached_power_law(beta: float, u: int) -> PowerLawDist:
    """build_power_law, memoized per process."""
    return build_power_law(beta, u)


def build_controller(spec: AlgorithmSpec, n: int) -> LambdaController:
    """Create the lambda controller of an ollga-* algorithm at size n.

    Raises:
        ValueError: If `spec` names a baseline.
    """
    match spec.name:
        case "ollga-static":
            lam = spec.lambda_value
            return StaticController(optimal_static_lambda(n) if lam is None else lam)
        case "ollga-fitdep":
            return FitnessDependentController()
        case "ollga-onefifth":
            return OneFifthController(
                cap=spec.resolve_cap(n), update_factor=spec.update_factor
            )
        case "ollga-fast":
            return HeavyTailedController(cached_power_law(spec.beta, spec.resolve_u(n)))
    raise ValueError(f"{spec.name} has no lambda controller")


def build_problem(name: ProblemName, n: int, rng: np.random.Generator) -> Problem:
    """Create a problem instance; MAX-3SAT formulas are drawn from `rng`."""
    if name == "maxsat":
        return MaxSatProblem(generate_sat_instance(n, rng))
    return OneMaxProblem(n)


@dataclass(frozen=True)
class RunTask:
    """Everything needed to execute one run in any process.

    Attributes:
        spec: Algorithm and parameters.
        problem: Problem tag.
        n: Problem size.
        run: Run index.
        seed: Derived 64-bit seed of the run.
        max_evaluations: Evaluation limit or None.
        record_wall_time: Keep the measured wall time; 0 otherwise.
    """

    spec: AlgorithmSpec
    problem: ProblemName
    n: int
    run: int
    seed: int
    max_evaluations: int | None
    record_wall_time: bool = True


def execute_run(task: RunTask) -> RunRecord:
    """Run one task and return its labelled RunRecord."""
    instance_rng, rng = run_streams(task.seed)
    problem = build_problem(task.problem, task.n, instance_rng)
    budget = RunBudget(
        target_fitness=problem.optimum, max_evaluations=task.max_evaluations
    )
    spec = task.spec
    if spec.name == "rls":
        record = run_rls(problem, rng, budget)
    elif spec.name == "opo-ea":
        record = run_one_plus_one_ea(problem, rng, budget)
    else:
        record = run_ollga(
            problem,
            build_controller(spec, task.n),
            rng,
            budget,
            success_on_equal=spec.success_on_equal,
        )
    record = dataclasses.replace(
        record,
        algorithm=spec.label(),
        run=task.run,
        seed=task.seed,
        wall_ms=record.wall_ms if task.record_wall_time else 0.0,
    )
    logger.debug("%r", record)
    return record


def plan_tasks(
    config: ExperimentConfig, record_wall_time: bool = True
) -> list[RunTask]:
    """Expand an experiment into one task per (n, run)."""
    label = config.algorithm.label()
    return [
        RunTask(
            spec=config.algorithm,
            problem=config.problem,
            n=n,
            run=run,
            seed=derive_seed(config.base_seed, label, n, run),
            max_evaluations=config.budget_for(n),
            record_wall_time=record_wall_time,
        )
        for n in config.sizes
        for run in range(config.runs)
    ]


@dataclass
class ExperimentResult:
    """Run records and their summaries.

    Attributes:
        records: Sorted by (algorithm, problem, n, run).
        summaries: One row per (algorithm, problem, n).
    """

    records: list[RunRecord]
    summaries: list[SummaryRow]

    @property
    def failed_runs(self) -> int:
        """Number of runs stopped by the evaluation limit."""
        return sum(1 for r in self.records if not r.hit_optimum)


class ExperimentRunner:
    """Executes experiments, optionally across worker processes.

    Attributes:
        workers: Number of worker processes; 1 runs everything in-process.
        record_wall_time: Keep measured wall times in the records.
    """

    def __init__(self, workers: int = 1, record_wall_time: bool = True) -> None:
        if workers < 1:
            raise ValueError(f"workers must be at least 1, got {workers}")
        self.workers = workers
        self.record_wall_time = record_wall_time

    def _execute(self, tasks: list[RunTask]) -> list[RunRecord]:
        if self.workers == 1 or len(tasks) <= 1:
            return [execute_run(task) for task in tasks]
        chunksize = max(1, len(tasks) // (4 * self.workers))
        with ProcessPoolExecutor(max_workers=self.workers) as executor:
            return list(executor.map(execute_run, tasks, chunksize=chunksize))

    def run_many(self, configs: list[ExperimentConfig]) -> ExperimentResult:
        """Run several experiments and aggregate them together."""
        tasks = [
            task
            for config in configs
            for task in plan_tasks(config, self.record_wall_time)
        ]
        started = time.perf_counter()
        records = self._execute(tasks)
        records.sort(key=lambda r: (r.algorithm, r.problem, r.n, r.run))
        summaries = summarize(records)
        for row in summaries:
            logger.info(
                "%s %s n=%d: %d runs, evals/n = %.3f ± %.3f",
                row.algorithm,
                row.problem,
                row.n,
                row.runs,
                row.mean_evals_per_n,
                row.std_evals_per_n,
            )
        logger.debug(
            "%d runs finished in %.1f s", len(records), time.perf_counter() - started
        )
        return ExperimentResult(records=records, summaries=summaries)

    def run(self, config: ExperimentConfig) -> ExperimentResult:
        """Run a single experiment."""
        return self.run_many([config])


def run_experiment(
    config: ExperimentConfig, *, workers: int = 1, record_wall_time: bool = True
) -> ExperimentResult:
    """Execute every run of `config` and summarize them."""
    return ExperimentRunner(workers, record_wall_time).run(config)
