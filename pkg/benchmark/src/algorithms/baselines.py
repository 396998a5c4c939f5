"""Randomized local search and the (1+1) EA."""

import numpy as np

from ..models.run_record import RunBudget, RunRecord
from ..problems.base_problem import Problem
from ..problems.bit_string import BitString
from ..problems.patch import random_patch
from ..sampling.mutation_strength import sample_ell_conditioned
from .run_loop import RunLoop
from .trace import IterationObserver, IterationTrace


def _run_single_mutant(
    label: str,
    problem: Problem,
    rng: np.random.Generator,
    budget: RunBudget,
    initial: BitString | None,
    observer: IterationObserver | None,
    *,
    standard_bit_mutation: bool,
) -> RunRecord:
    loop = RunLoop(problem, rng, budget, initial)
    state = loop.state
    n = problem.n
    while loop.running():
        ell = sample_ell_conditioned(n, 1.0, rng) if standard_bit_mutation else 1
        patch = random_patch(n, ell, rng)
        fitness = state.eval_patch(patch)
        loop.evaluations += 1
        loop.iterations += 1

        before = state.fitness
        accepted = fitness >= before
        if accepted:
            state.commit_patch(patch, fitness)

        if observer is not None:
            observer(
                IterationTrace(
                    iteration=loop.iterations,
                    lam=1.0,
                    lambda_int=1,
                    ell=ell,
                    fitness_before=before,
                    fitness_after=state.fitness,
                    evaluations=1,
                    mutants=[patch],
                    mutation_winner=patch,
                    mutation_fitness=fitness,
                    winner=patch,
                    winner_fitness=fitness,
                    accepted=accepted,
                )
            )
    return loop.finish(label)


def run_rls(
    problem: Problem,
    rng: np.random.Generator,
    budget: RunBudget,
    *,
    initial: BitString | None = None,
    observer: IterationObserver | None = None,
) -> RunRecord:
    """Randomized local search: flip one uniform bit, keep it if not worse.

    Args:
        problem: Problem to maximize.
        rng: Random stream of this run.
        budget: Target fitness and evaluation limit.
        initial: Starting point; uniform random when omitted.
        observer: Called after every iteration.

    Returns:
        RunRecord of the run. One evaluation per iteration.
    """
    return _run_single_mutant(
        "rls", problem, rng, budget, initial, observer, standard_bit_mutation=False
    )


def run_one_plus_one_ea(
    problem: Problem,
    rng: np.random.Generator,
    budget: RunBudget,
    *,
    initial: BitString | None = None,
    observer: IterationObserver | None = None,
) -> RunRecord:
    """(1+1) EA with standard bit mutation at rate 1/n.

    Offspring identical to the parent are never created: the number of
    flipped bits is drawn as Bin(n, 1/n) conditioned on being positive, which
    is the same as resampling until the offspring differs.
    """
    return _run_single_mutant(
        "opo-ea", problem, rng, budget, initial, observer, standard_bit_mutation=True
    )
