"""Monte-Carlo estimate of the one-iteration improvement probability."""

import math
from dataclasses import dataclass

import numpy as np

from ..algorithms.controllers import ControllerState, LambdaController
from ..algorithms.ollga import ollga_iteration
from ..problems.bit_string import BitString
from ..problems.onemax import OneMaxState
from ..problems.patch import make_patch
from ..utils.errors import InvalidParameterError


@dataclass(frozen=True)
class ProgressEstimate:
    """Fraction of single iterations that strictly improved the fitness.

    Attributes:
        probability: Estimated improvement probability.
        stderr: Binomial standard error of the estimate.
        successes: Improving trials.
        trials: Trials performed.
    """

    probability: float
    stderr: float
    successes: int
    trials: int


def onemax_state_at_distance(n: int, d: int) -> OneMaxState:
    """OneMax state whose first d bits are zero and the rest one."""
    if not 1 <= d <= n:
        raise InvalidParameterError(f"d must lie in [1..{n}], got {d}")
    x = BitString.ones(n)
    x.flip(make_patch(np.arange(d), n))
    return OneMaxState(x)


def estimate_progress_probability(
    n: int,
    d: int,
    controller: LambdaController,
    trials: int,
    rng: np.random.Generator,
) -> ProgressEstimate:
    """Run `trials` independent iterations from a point at distance d.

    The state is never committed, so every trial starts from the same
    parent. Stateful controllers are reset before each trial.

    Raises:
        InvalidParameterError: If d is outside [1..n] or trials < 1.
    """
    if trials < 1:
        raise InvalidParameterError(f"trials must be positive, got {trials}")
    state = onemax_state_at_distance(n, d)
    successes = 0
    for _ in range(trials):
        controller.reset()
        lam = controller.next_lambda(ControllerState(n, state.fitness), rng)
        lam = min(max(lam, 1.0), float(n))
        trace = ollga_iteration(state, lam, rng)
        if trace.winner_fitness > state.fitness:
            successes += 1
    p = successes / trials
    return ProgressEstimate(
        probability=p,
        stderr=math.sqrt(p * (1 - p) / trials),
        successes=successes,
        trials=trials,
    )
