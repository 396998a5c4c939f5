"""Bookkeeping shared by every optimization loop."""

import logging
import time

import numpy as np

from ..models.run_record import RunBudget, RunRecord
from ..problems.base_problem import FitnessState, Problem
from ..problems.bit_string import BitString
from ..utils.errors import InvalidParameterError

logger = logging.getLogger(__name__)


class RunLoop:
    """Holds the state, counters and clock of one run.

    The initial search point is evaluated when the state is created; that
    evaluation is not counted.
    """

    def __init__(
        self,
        problem: Problem,
        rng: np.random.Generator,
        budget: RunBudget,
        initial: BitString | None = None,
    ) -> None:
        if initial is not None and initial.n != problem.n:
            raise InvalidParameterError(
                f"Initial point has length {initial.n}, problem size is {problem.n}"
            )
        self.problem = problem
        self.budget = budget
        self._started = time.perf_counter()
        x = initial.copy() if initial is not None else BitString.random(problem.n, rng)
        self.state: FitnessState = problem.create_state(x)
        self.evaluations = 0
        self.iterations = 0

    def running(self) -> bool:
        """True while neither the target nor the evaluation limit is reached."""
        return self.state.fitness < self.budget.target_fitness and not (
            self.budget.exhausted(self.evaluations)
        )

    def finish(self, algorithm: str) -> RunRecord:
        """Build the RunRecord of the finished run."""
        wall_ms = (time.perf_counter() - self._started) * 1000.0
        hit = self.state.fitness >= self.budget.target_fitness
        if not hit:
            logger.warning(
                "%s stopped by budget on %s n=%d after %d evaluations (f=%d/%d)",
                algorithm,
                self.problem.name,
                self.problem.n,
                self.evaluations,
                self.state.fitness,
                self.budget.target_fitness,
            )
        return RunRecord(
            evaluations=self.evaluations,
            iterations=self.iterations,
            best_fitness=self.state.fitness,
            wall_ms=wall_ms,
            hit_optimum=hit,
            algorithm=algorithm,
            problem=self.problem.name,
            n=self.problem.n,
        )


def default_budget(problem: Problem, max_evaluations: int | None = None) -> RunBudget:
    """Budget that stops at the problem's optimum."""
    return RunBudget(target_fitness=problem.optimum, max_evaluations=max_evaluations)
