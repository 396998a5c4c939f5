"""Per-iteration traces handed to run observers."""

from collections.abc import Callable
from dataclasses import dataclass, field

from ..problems.patch import EMPTY_PATCH, Patch


@dataclass
class IterationTrace:
    """What happened in one iteration of an optimization loop.

    Baselines fill in a single mutant and leave the crossover fields empty.

    Attributes:
        iteration: One-based iteration number.
        lam: Real population size parameter (1 for the baselines).
        lambda_int: Number of offspring per phase.
        ell: Mutation strength.
        fitness_before: Fitness of the parent.
        fitness_after: Fitness after selection.
        evaluations: Fitness evaluations spent in this iteration.
        mutants: Patches of all mutants.
        mutation_winner: Patch of the best mutant.
        mutation_fitness: Fitness of the best mutant.
        crossovers: Patches of the evaluated crossover offspring.
        skipped_copies: Crossover samples equal to the best mutant, which were
            not evaluated.
        winner: Patch of the selected offspring.
        winner_fitness: Fitness of the selected offspring.
        accepted: Whether the offspring replaced the parent.
    """

    iteration: int
    lam: float
    lambda_int: int
    ell: int
    fitness_before: int
    fitness_after: int = 0
    evaluations: int = 0
    mutants: list[Patch] = field(default_factory=list)
    mutation_winner: Patch = field(default_factory=lambda: EMPTY_PATCH)
    mutation_fitness: int = 0
    crossovers: list[Patch] = field(default_factory=list)
    skipped_copies: int = 0
    winner: Patch = field(default_factory=lambda: EMPTY_PATCH)
    winner_fitness: int = 0
    accepted: bool = False

    @property
    def improved(self) -> bool:
        """True if the iteration strictly increased the fitness."""
        return self.fitness_after > self.fitness_before


type IterationObserver = Callable[[IterationTrace], None]
