"""The (1+(lambda,lambda)) genetic algorithm.

One iteration creates lambda mutants of the parent x, all at the same
distance l ~ Bin(n, lambda/n) (conditioned on l >= 1), picks the best mutant
x', and then creates lambda crossover offspring that take each bit from x'
with probability 1/lambda and from x otherwise. The best of them replaces x
if it is not worse.

Evaluations follow the practice-aware rules: crossover samples equal to x
are redrawn without evaluation; samples equal to x' are not evaluated, and
x' takes part in the final selection, losing ties against any evaluated
crossover offspring.
"""

import logging
import math

import numpy as np

from ..models.run_record import RunBudget, RunRecord
from ..problems.base_problem import FitnessState, Problem
from ..problems.bit_string import BitString
from ..problems.patch import Patch, random_patch, subsample_patch
from ..sampling.mutation_strength import sample_ell_conditioned
from .controllers import ControllerState, LambdaController
from .run_loop import RunLoop
from .trace import IterationObserver, IterationTrace

logger = logging.getLogger(__name__)


def offspring_count(lam: float) -> int:
    """round(lambda) with halves rounded up, at least 1."""
    return max(1, math.floor(lam + 0.5))


def ollga_iteration(
    state: FitnessState,
    lam: float,
    rng: np.random.Generator,
    *,
    record: bool = False,
) -> IterationTrace:
    """Run the mutation and crossover phases of one iteration.

    The state is not modified; the caller decides whether to commit
    `trace.winner`.

    Args:
        state: Incremental fitness state of the parent.
        lam: Real population size, 1 <= lam <= n.
        rng: Random stream of the run.
        record: Keep every mutant and crossover patch in the trace.

    Returns:
        IterationTrace with the winner, its fitness and the evaluations spent.
        `fitness_after` is left at the parent's fitness.
    """
    n = state.n
    lambda_int = offspring_count(lam)
    ell = sample_ell_conditioned(n, lam, rng)
    trace = IterationTrace(
        iteration=0,
        lam=lam,
        lambda_int=lambda_int,
        ell=ell,
        fitness_before=state.fitness,
        fitness_after=state.fitness,
    )

    # mutation phase
    best_mutant: Patch | None = None
    best_fitness = 0
    ties = 0
    for _ in range(lambda_int):
        mutant = random_patch(n, ell, rng)
        fitness = state.eval_patch(mutant)
        if record:
            trace.mutants.append(mutant)
        if best_mutant is None or fitness > best_fitness:
            best_mutant, best_fitness, ties = mutant, fitness, 1
        elif fitness == best_fitness:
            ties += 1
            if rng.integers(ties) == 0:
                best_mutant = mutant
    assert best_mutant is not None
    evaluations = lambda_int

    # crossover phase
    bias = 1.0 / lam
    best_cross: Patch | None = None
    cross_fitness = 0
    ties = 0
    for _ in range(lambda_int):
        child = subsample_patch(best_mutant, bias, rng)
        while child.size == 0:
            child = subsample_patch(best_mutant, bias, rng)
        if child.size == best_mutant.size:
            trace.skipped_copies += 1
            continue
        fitness = state.eval_patch(child)
        evaluations += 1
        if record:
            trace.crossovers.append(child)
        if best_cross is None or fitness > cross_fitness:
            best_cross, cross_fitness, ties = child, fitness, 1
        elif fitness == cross_fitness:
            ties += 1
            if rng.integers(ties) == 0:
                best_cross = child

    trace.mutation_winner = best_mutant
    trace.mutation_fitness = best_fitness
    trace.evaluations = evaluations
    if best_cross is not None and cross_fitness >= best_fitness:
        trace.winner, trace.winner_fitness = best_cross, cross_fitness
    else:
        trace.winner, trace.winner_fitness = best_mutant, best_fitness
    return trace


def run_ollga(
    problem: Problem,
    controller: LambdaController,
    rng: np.random.Generator,
    budget: RunBudget,
    *,
    initial: BitString | None = None,
    observer: IterationObserver | None = None,
    success_on_equal: bool = False,
) -> RunRecord:
    """Optimize `problem` with the (1+(lambda,lambda)) GA.

    Args:
        problem: Problem to maximize.
        controller: Source of lambda for each iteration. It is reset first.
        rng: Random stream of this run; also used by sampling controllers.
        budget: Target fitness and evaluation limit, checked between
            iterations.
        initial: Starting point; uniform random when omitted.
        observer: Called with the full trace after every iteration.
        success_on_equal: Report equal-fitness acceptance as a success to the
            controller. By default only strict improvements count.

    Returns:
        RunRecord of the run, labelled ``ollga-<controller tag>``.
    """
    controller.reset()
    loop = RunLoop(problem, rng, budget, initial)
    state = loop.state
    n = problem.n
    last_success: bool | None = None
    clamped = 0

    while loop.running():
        lam = controller.next_lambda(
            ControllerState(n, state.fitness, last_success), rng
        )
        if lam > n:
            lam = float(n)
            clamped += 1
        lam = max(lam, 1.0)

        trace = ollga_iteration(state, lam, rng, record=observer is not None)
        loop.evaluations += trace.evaluations
        loop.iterations += 1

        before = state.fitness
        if trace.winner_fitness >= before:
            state.commit_patch(trace.winner, trace.winner_fitness)
            trace.accepted = True
        last_success = trace.winner_fitness > before or (
            success_on_equal and trace.winner_fitness == before
        )

        if observer is not None:
            trace.iteration = loop.iterations
            trace.fitness_after = state.fitness
            observer(trace)

    if clamped:
        logger.warning(
            "lambda exceeded n=%d in %d iterations and was clamped", n, clamped
        )
    return loop.finish(f"ollga-{controller.tag}")
