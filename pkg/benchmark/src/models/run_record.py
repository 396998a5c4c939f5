"""Data models for single runs and their aggregated summaries."""

from dataclasses import asdict, dataclass

from ..utils.errors import InvalidParameterError

type RunRecordValue = str | int | float | bool

RUN_CSV_COLUMNS = (
    "algorithm",
    "problem",
    "n",
    "run",
    "seed",
    "evaluations",
    "iterations",
    "best_fitness",
    "hit_optimum",
    "wall_ms",
)

SUMMARY_CSV_COLUMNS = (
    "algorithm",
    "problem",
    "n",
    "runs",
    "mean_evals_per_n",
    "std_evals_per_n",
    "mean_iterations",
)


@dataclass(frozen=True)
class RunBudget:
    """Termination criteria for a single run.

    Attributes:
        target_fitness: Fitness of the optimum; reaching it ends the run.
        max_evaluations: Evaluation limit, or None for unlimited.
    """

    target_fitness: int
    max_evaluations: int | None = None

    def __post_init__(self) -> None:
        """Validate that both limits are positive."""
        if self.target_fitness < 1:
            raise InvalidParameterError(
                f"target_fitness must be positive, got {self.target_fitness}"
            )
        if self.max_evaluations is not None and self.max_evaluations < 1:
            raise InvalidParameterError(
                f"max_evaluations must be positive, got {self.max_evaluations}"
            )

    def exhausted(self, evaluations: int) -> bool:
        """Return True once `evaluations` reaches the evaluation limit."""
        return self.max_evaluations is not None and evaluations >= self.max_evaluations


@dataclass(frozen=True)
class RunRecord:
    """Outcome of one optimization run.

    The labelling fields (algorithm, problem, n, run) are filled in by the
    experiment harness; algorithms leave them at their defaults.

    Attributes:
        evaluations: Fitness evaluations spent, excluding the initial point.
        iterations: Iterations of the main loop.
        best_fitness: Fitness of the final (and best) search point.
        seed: 64-bit seed the run's random stream was created from.
        wall_ms: Wall-clock duration of the run in milliseconds.
        hit_optimum: Whether the target fitness was reached.
        algorithm: Algorithm label.
        problem: Problem tag ('onemax' or 'maxsat').
        n: Problem size.
        run: Run index within its (algorithm, n) group.
    """

    evaluations: int
    iterations: int
    best_fitness: int
    seed: int = 0
    wall_ms: float = 0.0
    hit_optimum: bool = False
    algorithm: str = ""
    problem: str = ""
    n: int = 0
    run: int = 0

    @property
    def evals_per_n(self) -> float:
        """Evaluations divided by the problem size."""
        return self.evaluations / self.n

    def to_dict(self) -> dict[str, RunRecordValue]:
        """Serialize RunRecord to a JSON-compatible dictionary."""
        return asdict(self)

    def to_row(self) -> dict[str, RunRecordValue]:
        """Return the record keyed by the per-run CSV columns, in order."""
        data = asdict(self)
        return {column: data[column] for column in RUN_CSV_COLUMNS}

    def __repr__(self) -> str:
        """Human-readable representation for debugging."""
        status = "[+]" if self.hit_optimum else "[-]"
        return (
            f"RunRecord({status} {self.algorithm or '?'} {self.problem or '?'} "
            f"n={self.n} run={self.run}, evals={self.evaluations}, "
            f"iters={self.iterations}, best={self.best_fitness})"
        )


@dataclass(frozen=True)
class SummaryRow:
    """Aggregate of all runs of one (algorithm, problem, n) group.

    Attributes:
        algorithm: Algorithm label.
        problem: Problem tag.
        n: Problem size.
        runs: Number of runs aggregated.
        mean_evals_per_n: Mean of evaluations / n.
        std_evals_per_n: Sample standard deviation of evaluations / n
            (0 for a single run).
        mean_iterations: Mean number of iterations.
    """

    algorithm: str
    problem: str
    n: int
    runs: int
    mean_evals_per_n: float
    std_evals_per_n: float
    mean_iterations: float

    def to_dict(self) -> dict[str, RunRecordValue]:
        """Serialize SummaryRow to a JSON-compatible dictionary."""
        return asdict(self)

    def __repr__(self) -> str:
        """Human-readable representation for debugging."""
        return (
            f"SummaryRow({self.algorithm} {self.problem} n={self.n}, "
            f"runs={self.runs}, evals/n={self.mean_evals_per_n:.3f}"
            f"±{self.std_evals_per_n:.3f})"
        )
