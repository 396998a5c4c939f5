"""OneMax: the number of one-bits."""

from .base_problem import FitnessState, Problem
from .bit_string import BitString
from .patch import Patch, validate_patch


def onemax_eval(x: BitString) -> int:
    """Return the number of one-bits of `x`."""
    return x.count_ones()


class OneMaxState(FitnessState):
    """Incremental OneMax state; a patch costs O(|patch|) bit reads."""

    def __init__(self, x: BitString) -> None:
        self.current = x
        self.fitness = onemax_eval(x)

    def eval_patch(self, patch: Patch) -> int:
        if patch.size == 0:
            return self.fitness
        validate_patch(patch, self.current.n, check_order=False)
        ones = int(self.current.get_bits(patch).sum())
        # each flipped one loses a point, each flipped zero gains one
        return self.fitness + patch.size - 2 * ones

    def commit_patch(self, patch: Patch, new_fitness: int) -> None:
        self.current.flip(patch)
        self.fitness = new_fitness

    def recompute(self) -> int:
        return onemax_eval(self.current)


class OneMaxProblem(Problem):
    """OneMax on n bits; the optimum is the all-ones string."""

    name = "onemax"

    def __init__(self, n: int) -> None:
        self.n = n
        self.optimum = n

    def evaluate(self, x: BitString) -> int:
        return onemax_eval(x)

    def create_state(self, x: BitString) -> OneMaxState:
        return OneMaxState(x)

    def __repr__(self) -> str:
        return f"OneMaxProblem(n={self.n})"
