"""Planted random MAX-3SAT instances and their incremental evaluation.

Every clause is satisfied by the all-ones assignment, so the optimum fitness
equals the clause count m = round(4 n ln n).
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from ..utils.errors import InvalidParameterError
from .base_problem import FitnessState, Problem
from .bit_string import BitString
from .patch import Patch, validate_patch

logger = logging.getLogger(__name__)

CLAUSE_WIDTH = 3
CLAUSE_DENSITY = 4.0


@dataclass(frozen=True)
class Clause:
    """A disjunction of three literals.

    Attributes:
        vars: Zero-based variable indices.
        signs: True for a positive literal, False for a negated one.
    """

    vars: tuple[int, int, int]
    signs: tuple[bool, bool, bool]

    def is_satisfied(self, bits: npt.NDArray[np.bool_]) -> bool:
        """Return True if at least one literal is true under `bits`."""
        return any(
            bool(bits[v]) == s for v, s in zip(self.vars, self.signs, strict=True)
        )


class SatInstance:
    """An immutable 3-CNF formula with a per-variable occurrence index.

    Clauses are stored column-wise in (m, 3) arrays. The occurrence index is
    in compressed form: the literal slots of variable v are
    occ_clauses[occ_offsets[v]:occ_offsets[v + 1]] with matching occ_signs.

    Attributes:
        n: Number of variables.
        clause_vars: (m, 3) variable indices.
        clause_signs: (m, 3) literal signs.
        occ_offsets: (n + 1,) start offsets into the occurrence arrays.
        occ_clauses: Clause index of each literal slot, grouped by variable.
        occ_signs: Sign of each literal slot, grouped by variable.
    """

    def __init__(
        self,
        n: int,
        clause_vars: npt.NDArray[np.int64],
        clause_signs: npt.NDArray[np.bool_],
    ) -> None:
        if clause_vars.ndim != 2 or clause_vars.shape[1] != CLAUSE_WIDTH:
            raise InvalidParameterError("clause_vars must have shape (m, 3)")
        if clause_signs.shape != clause_vars.shape:
            raise InvalidParameterError("clause_signs must match clause_vars")
        if clause_vars.size and (clause_vars.min() < 0 or clause_vars.max() >= n):
            raise InvalidParameterError(f"Variable index out of range for n={n}")

        self.n = n
        self.clause_vars = np.ascontiguousarray(clause_vars, dtype=np.int64)
        self.clause_signs = np.ascontiguousarray(clause_signs, dtype=bool)

        flat_vars = self.clause_vars.ravel()
        order = np.argsort(flat_vars, kind="stable")
        self.occ_clauses = (order // CLAUSE_WIDTH).astype(np.int64)
        self.occ_signs = self.clause_signs.ravel()[order]
        counts = np.bincount(flat_vars, minlength=n)
        self.occ_offsets = np.concatenate(([0], np.cumsum(counts))).astype(np.int64)

        for array in (
            self.clause_vars,
            self.clause_signs,
            self.occ_clauses,
            self.occ_signs,
            self.occ_offsets,
        ):
            array.setflags(write=False)

    @property
    def m(self) -> int:
        """Number of clauses."""
        return int(self.clause_vars.shape[0])

    @property
    def clauses(self) -> list[Clause]:
        """The clauses as Clause objects (built on demand)."""
        return [
            Clause(
                vars=(int(v[0]), int(v[1]), int(v[2])),
                signs=(bool(s[0]), bool(s[1]), bool(s[2])),
            )
            for v, s in zip(self.clause_vars, self.clause_signs, strict=True)
        ]

    def occurrence(self, var: int) -> npt.NDArray[np.int64]:
        """Return the indices of the clauses containing `var`."""
        start, end = self.occ_offsets[var], self.occ_offsets[var + 1]
        return self.occ_clauses[start:end]

    def is_planted(self) -> bool:
        """Return True if the all-ones assignment satisfies every clause."""
        return bool(np.all(self.clause_signs.any(axis=1)))

    def __repr__(self) -> str:
        return f"SatInstance(n={self.n}, m={self.m})"


def clause_count(n: int) -> int:
    """Return round(4 n ln n), rounding halves up."""
    return int(math.floor(CLAUSE_DENSITY * n * math.log(n) + 0.5))


def generate_sat_instance(n: int, rng: np.random.Generator) -> SatInstance:
    """Generate a planted random 3-CNF formula on n variables.

    Each clause draws three distinct variables uniformly and three independent
    uniform signs, and the whole draw is repeated while all three literals are
    negated. Draws are made in batches; accepted rows keep their draw order,
    which is the same law as drawing clause by clause.

    Args:
        n: Number of variables, at least 3.
        rng: Random stream owned by the caller.

    Returns:
        SatInstance with m = round(4 n ln n) clauses.

    Raises:
        InvalidParameterError: If n < 3.
    """
    if n < CLAUSE_WIDTH:
        raise InvalidParameterError(f"MAX-3SAT needs n >= 3, got {n}")
    m = clause_count(n)

    var_blocks: list[npt.NDArray[np.int64]] = []
    sign_blocks: list[npt.NDArray[np.bool_]] = []
    accepted = 0
    while accepted < m:
        batch = max(64, 2 * (m - accepted))
        cand_vars = rng.integers(0, n, size=(batch, CLAUSE_WIDTH), dtype=np.int64)
        cand_signs = rng.random((batch, CLAUSE_WIDTH)) < 0.5
        distinct = (
            (cand_vars[:, 0] != cand_vars[:, 1])
            & (cand_vars[:, 0] != cand_vars[:, 2])
            & (cand_vars[:, 1] != cand_vars[:, 2])
        )
        keep = distinct & cand_signs.any(axis=1)
        take = min(int(keep.sum()), m - accepted)
        rows = np.flatnonzero(keep)[:take]
        var_blocks.append(cand_vars[rows])
        sign_blocks.append(cand_signs[rows])
        accepted += take

    instance = SatInstance(n, np.concatenate(var_blocks), np.concatenate(sign_blocks))
    logger.debug("Generated %r", instance)
    return instance


def _true_literals(
    instance: SatInstance, bits: npt.NDArray[np.bool_]
) -> npt.NDArray[np.bool_]:
    return bits[instance.clause_vars] == instance.clause_signs


def maxsat_eval(instance: SatInstance, x: BitString) -> int:
    """Return the number of clauses with at least one true literal.

    Raises:
        InvalidParameterError: If x has the wrong length.
    """
    if x.n != instance.n:
        raise InvalidParameterError(
            f"Assignment length {x.n} does not match instance size {instance.n}"
        )
    return int(_true_literals(instance, x.to_bits()).any(axis=1).sum())


class MaxSatState(FitnessState):
    """Incremental MAX-3SAT state.

    Caches the number of true literals per clause (0..3). A clause changes its
    satisfaction status only when that count crosses between 0 and 1, so a
    patch costs time proportional to the occurrences of its variables.
    """

    def __init__(self, instance: SatInstance, x: BitString) -> None:
        if x.n != instance.n:
            raise InvalidParameterError(
                f"Assignment length {x.n} does not match instance size {instance.n}"
            )
        self.instance = instance
        self.current = x
        self.true_counts = self._count_true_literals()
        self.fitness = int(np.count_nonzero(self.true_counts))

    def _count_true_literals(self) -> npt.NDArray[np.int64]:
        return _true_literals(self.instance, self.current.to_bits()).sum(
            axis=1, dtype=np.int64
        )

    def _touched(
        self, patch: Patch
    ) -> tuple[npt.NDArray[np.int64], npt.NDArray[np.int64], npt.NDArray[np.int64]]:
        """Return (clauses, old counts, new counts) of clauses hit by `patch`."""
        inst = self.instance
        starts = inst.occ_offsets[patch]
        lengths = inst.occ_offsets[patch + 1] - starts
        total = int(lengths.sum())
        if total == 0:
            empty = np.empty(0, dtype=np.int64)
            return empty, empty, empty

        # slot positions of every literal of every flipped variable
        base = np.repeat(starts - (np.cumsum(lengths) - lengths), lengths)
        slots = base + np.arange(total, dtype=np.int64)
        clause_ids = inst.occ_clauses[slots]
        signs = inst.occ_signs[slots]
        bits = self.current.get_bits(np.repeat(patch, lengths)).astype(bool)

        # a true literal becomes false and vice versa
        delta = np.where(bits == signs, -1, 1)
        clauses, inverse = np.unique(clause_ids, return_inverse=True)
        change = np.bincount(inverse, weights=delta).astype(np.int64)
        old = self.true_counts[clauses]
        return clauses, old, old + change

    def eval_patch(self, patch: Patch) -> int:
        if patch.size == 0:
            return self.fitness
        validate_patch(patch, self.current.n, check_order=False)
        _, old, new = self._touched(patch)
        gained = int(np.count_nonzero((old == 0) & (new > 0)))
        lost = int(np.count_nonzero((old > 0) & (new == 0)))
        return self.fitness + gained - lost

    def commit_patch(self, patch: Patch, new_fitness: int) -> None:
        if patch.size == 0:
            return
        clauses, _, new = self._touched(patch)
        self.true_counts[clauses] = new
        self.current.flip(patch)
        self.fitness = new_fitness

    def recompute(self) -> int:
        return maxsat_eval(self.instance, self.current)

    def is_consistent(self) -> bool:
        return self.fitness == self.recompute() and bool(
            np.array_equal(self.true_counts, self._count_true_literals())
        )


class MaxSatProblem(Problem):
    """Maximize the number of satisfied clauses of a planted instance."""

    name = "maxsat"

    def __init__(self, instance: SatInstance) -> None:
        self.instance = instance
        self.n = instance.n
        self.optimum = instance.m

    def evaluate(self, x: BitString) -> int:
        return maxsat_eval(self.instance, x)

    def create_state(self, x: BitString) -> MaxSatState:
        return MaxSatState(self.instance, x)

    def __repr__(self) -> str:
        return f"MaxSatProblem({self.instance!r})"
