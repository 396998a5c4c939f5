"""Population-size controllers for the (1+(lambda,lambda)) GA.

A controller is asked for a real lambda once per iteration. Stateful
controllers (the one-fifth rule) update from the success flag of the
previous iteration that the caller passes in.
"""

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass

import numpy as np

from ..sampling.power_law import PowerLawDist, sample_lambda
from ..utils.errors import InvalidParameterError

DEFAULT_UPDATE_FACTOR = 1.5


@dataclass(frozen=True)
class ControllerState:
    """What a controller may look at when choosing lambda.

    Attributes:
        n: Problem size.
        current_fitness: Fitness of the current search point.
        last_iteration_success: Outcome of the previous iteration, or None
            before the first iteration.
    """

    n: int
    current_fitness: int
    last_iteration_success: bool | None = None


def lnp(x: float) -> float:
    """ln(x + 1), the logarithm that stays positive for every x > 0."""
    return math.log1p(x)


def optimal_static_lambda(n: int) -> float:
    """Return 2 sqrt(lnp n * lnp lnp n / lnp lnp lnp n).

    Asymptotically optimal fixed population size for OneMax.
    """
    if n < 1:
        raise InvalidParameterError(f"n must be at least 1, got {n}")
    return 2.0 * math.sqrt(lnp(n) * lnp(lnp(n)) / lnp(lnp(lnp(n))))


def one_fifth_cap(n: int) -> float:
    """The 2 ln(n + 1) upper limit used by the capped variants."""
    return 2.0 * math.log(n + 1)


class LambdaController(ABC):
    """Base class for lambda controllers.

    Subclasses implement `next_lambda`. The returned value is real; the
    algorithm rounds it for the offspring count and uses it unrounded for
    the mutation rate and crossover bias.
    """

    tag: str = ""

    @abstractmethod
    def next_lambda(
        self, state: ControllerState, rng: np.random.Generator
    ) -> float:
        """Return lambda for the coming iteration.

        Parameters
        ----------
        state : ControllerState
            Problem size, current fitness and the previous outcome.
        rng : numpy.random.Generator
            The run's random stream, for controllers that sample.

        Returns
        -------
        float
            Population size parameter, at least 1.
        """

    def reset(self) -> None:
        """Forget any state accumulated during a run."""


class StaticController(LambdaController):
    """Always returns the same lambda."""

    tag = "static"

    def __init__(self, lam: float) -> None:
        if not (math.isfinite(lam) and lam >= 1.0):
            raise InvalidParameterError(f"Static lambda must be >= 1, got {lam}")
        self.lam = float(lam)

    def next_lambda(
        self, state: ControllerState, rng: np.random.Generator
    ) -> float:
        return self.lam

    def __repr__(self) -> str:
        return f"StaticController(lam={self.lam:.4g})"


class FitnessDependentController(LambdaController):
    """lambda = sqrt(n / (n - f(x))) for OneMax-like problems."""

    tag = "fitdep"

    def next_lambda(
        self, state: ControllerState, rng: np.random.Generator
    ) -> float:
        missing = state.n - state.current_fitness
        if missing <= 0:
            raise InvalidParameterError(
                "Fitness-dependent lambda needs a fitness below n "
                f"(n={state.n}, f={state.current_fitness}); it only applies "
                "to OneMax-scaled problems"
            )
        return math.sqrt(state.n / missing)

    def __repr__(self) -> str:
        return "FitnessDependentController()"


class OneFifthController(LambdaController):
    """Self-adjusting lambda following the one-fifth success rule.

    On success lambda is divided by F; on failure it is multiplied by
    F^(1/4). The result is clamped to [1, cap], where cap defaults to n.
    Four failures undo one success, so lambda is stationary when exactly one
    iteration in five succeeds.

    Attributes:
        cap: Upper limit on lambda, or None for n.
        update_factor: F > 1.
        initial: Starting lambda, restored by `reset`.
        lam: Current lambda.
    """

    tag = "onefifth"

    def __init__(
        self,
        cap: float | None = None,
        update_factor: float = DEFAULT_UPDATE_FACTOR,
        initial: float = 1.0,
    ) -> None:
        if not update_factor > 1.0:
            raise InvalidParameterError(
                f"Update factor must exceed 1, got {update_factor}"
            )
        if cap is not None and not cap >= 1.0:
            raise InvalidParameterError(f"Cap must be at least 1, got {cap}")
        if not initial >= 1.0:
            raise InvalidParameterError(f"Initial lambda must be >= 1, got {initial}")
        self.cap = cap
        self.update_factor = float(update_factor)
        self.initial = float(initial)
        self.lam = self.initial
        self._growth = self.update_factor**0.25

    def next_lambda(
        self, state: ControllerState, rng: np.random.Generator
    ) -> float:
        if state.last_iteration_success is True:
            self.lam /= self.update_factor
        elif state.last_iteration_success is False:
            self.lam *= self._growth
        upper = float(state.n) if self.cap is None else min(self.cap, float(state.n))
        self.lam = min(max(self.lam, 1.0), max(upper, 1.0))
        return self.lam

    def reset(self) -> None:
        self.lam = self.initial

    def __repr__(self) -> str:
        cap = "n" if self.cap is None else f"{self.cap:.4g}"
        return (
            f"OneFifthController(lam={self.lam:.4g}, cap={cap}, "
            f"F={self.update_factor})"
        )


class HeavyTailedController(LambdaController):
    """Draws a fresh lambda from a power-law distribution every iteration.

    The controller holds no per-run state; draws come from the run's own
    random stream.
    """

    tag = "fast"

    def __init__(self, dist: PowerLawDist) -> None:
        self.dist = dist

    def next_lambda(
        self, state: ControllerState, rng: np.random.Generator
    ) -> float:
        return float(sample_lambda(self.dist, rng))

    def __repr__(self) -> str:
        return f"HeavyTailedController({self.dist!r})"


def controller_next_lambda(
    controller: LambdaController,
    state: ControllerState,
    rng: np.random.Generator,
) -> float:
    """Ask `controller` for the lambda of the next iteration."""
    return controller.next_lambda(state, rng)
