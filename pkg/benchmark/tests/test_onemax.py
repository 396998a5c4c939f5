"""Tests for OneMax and its incremental state."""

import sys
from pathlib import Path

import numpy as np
import pytest

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.problems.base_problem import commit_patch, eval_patch
from src.problems.bit_string import BitString
from src.problems.onemax import OneMaxProblem, OneMaxState, onemax_eval
from src.problems.patch import EMPTY_PATCH, make_patch, random_patch
from src.utils.errors import InvalidParameterError


class TestOneMax:
    """Test suite for onemax_eval and OneMaxState."""

    def test_eval_examples(self):
        """Hand-counted values."""
        assert onemax_eval(BitString.zeros(8)) == 0
        assert onemax_eval(BitString.ones(8)) == 8
        assert onemax_eval(BitString.from_bits("10110010")) == 4

    def test_eval_patch_example(self):
        """0000 with {0, 2} flipped has two ones."""
        state = OneMaxState(BitString.from_bits("0000"))
        assert eval_patch(state, make_patch([0, 2], 4)) == 2
        assert str(state.current) == "0000"

    def test_empty_patch_is_identity(self):
        """Evaluating or committing nothing changes nothing."""
        state = OneMaxState(BitString.from_bits("0110"))
        assert eval_patch(state, EMPTY_PATCH) == 2
        commit_patch(state, EMPTY_PATCH, 2)
        assert str(state.current) == "0110"
        assert state.fitness == 2

    def test_commit_patch_example(self):
        """0000 + {0, 2} becomes 1010 with fitness 2."""
        state = OneMaxState(BitString.from_bits("0000"))
        patch = make_patch([0, 2], 4)
        returned = commit_patch(state, patch, eval_patch(state, patch))
        assert returned is state
        assert str(state.current) == "1010"
        assert state.fitness == 2
        assert state.is_consistent()

    def test_out_of_range_patch(self):
        """Indices beyond n are rejected."""
        state = OneMaxState(BitString.zeros(4))
        with pytest.raises(InvalidParameterError):
            state.eval_patch(np.array([4], dtype=np.int64))

    @pytest.mark.parametrize("n", [16, 64, 256])
    def test_incremental_matches_full(self, n):
        """Incremental and full evaluation agree on random walks."""
        rng = np.random.default_rng(n)
        state = OneMaxState(BitString.random(n, rng))
        for _ in range(10_000):
            patch = random_patch(n, int(rng.integers(1, n + 1)), rng)
            predicted = state.eval_patch(patch)
            y = state.current.copy()
            y.flip(patch)
            assert predicted == onemax_eval(y)
            if rng.random() < 0.3:
                state.commit_patch(patch, predicted)
        assert state.is_consistent()

    def test_problem(self):
        """Problem metadata and state creation."""
        problem = OneMaxProblem(16)
        assert problem.name == "onemax"
        assert problem.optimum == 16
        state = problem.create_state(BitString.ones(16))
        assert state.fitness == 16
        assert problem.evaluate(BitString.zeros(16)) == 0
