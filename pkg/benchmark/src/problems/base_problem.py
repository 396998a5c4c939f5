"""Abstract base classes for benchmark problems and their incremental state."""

from abc import ABC, abstractmethod

from .bit_string import BitString
from .patch import Patch


class FitnessState(ABC):
    """
    Current search point together with its fitness and evaluation caches.

    A state is owned by exactly one run. `eval_patch` is pure; only
    `commit_patch` mutates.

    Attributes
    ----------
    current : BitString
        The current search point.
    fitness : int
        Objective value of `current`.
    """

    current: BitString
    fitness: int

    @property
    def n(self) -> int:
        """Problem size."""
        return self.current.n

    @abstractmethod
    def eval_patch(self, patch: Patch) -> int:
        """
        Return the fitness of `current` XOR `patch` without mutating the state.

        Parameters
        ----------
        patch : Patch
            Sorted distinct indices in [0, n).

        Returns
        -------
        int
            Fitness of the patched string.
        """

    @abstractmethod
    def commit_patch(self, patch: Patch, new_fitness: int) -> None:
        """
        Apply `patch` to `current` and update fitness and caches.

        Parameters
        ----------
        patch : Patch
            The patch that produced `new_fitness` in `eval_patch`.
        new_fitness : int
            Value previously returned by `eval_patch(patch)`.
        """

    @abstractmethod
    def recompute(self) -> int:
        """Return the fitness of `current` evaluated from scratch."""

    def is_consistent(self) -> bool:
        """Check the cached fitness (and any caches) against a full recount."""
        return self.fitness == self.recompute()


class Problem(ABC):
    """
    Abstract base class for pseudo-Boolean maximization problems.

    Attributes
    ----------
    name : str
        Short problem tag used in result files ('onemax', 'maxsat').
    n : int
        Number of bits.
    optimum : int
        The maximal fitness value; runs stop once it is reached.
    """

    name: str
    n: int
    optimum: int

    @abstractmethod
    def evaluate(self, x: BitString) -> int:
        """Evaluate `x` from scratch."""

    @abstractmethod
    def create_state(self, x: BitString) -> FitnessState:
        """
        Wrap `x` into an incremental fitness state.

        The state takes ownership of `x`; callers pass a copy if they keep it.
        """


def eval_patch(state: FitnessState, patch: Patch) -> int:
    """Return the fitness of `state.current` XOR `patch`; `state` is unchanged."""
    return state.eval_patch(patch)


def commit_patch(state: FitnessState, patch: Patch, new_fitness: int) -> FitnessState:
    """Apply `patch` to `state` in place and return the same state."""
    state.commit_patch(patch, new_fitness)
    return state
