"""Benchmark problems with patch-based incremental fitness evaluation."""

from .base_problem import FitnessState, Problem, commit_patch, eval_patch
from .bit_string import BitString
from .dimacs import parse_dimacs, read_dimacs, to_dimacs, write_dimacs
from .maxsat import (
    Clause,
    MaxSatProblem,
    MaxSatState,
    SatInstance,
    clause_count,
    generate_sat_instance,
    maxsat_eval,
)
from .onemax import OneMaxProblem, OneMaxState, onemax_eval
from .patch import EMPTY_PATCH, Patch, make_patch, random_patch, subsample_patch

__all__ = [
    "BitString",
    "Patch",
    "EMPTY_PATCH",
    "make_patch",
    "random_patch",
    "subsample_patch",
    "FitnessState",
    "Problem",
    "eval_patch",
    "commit_patch",
    "OneMaxProblem",
    "OneMaxState",
    "onemax_eval",
    "Clause",
    "SatInstance",
    "MaxSatProblem",
    "MaxSatState",
    "clause_count",
    "generate_sat_instance",
    "maxsat_eval",
    "parse_dimacs",
    "read_dimacs",
    "to_dimacs",
    "write_dimacs",
]
