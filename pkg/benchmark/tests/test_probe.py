"""Tests for the Monte-Carlo improvement-probability estimate."""

import math
import sys
from pathlib import Path

import numpy as np
import pytest

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.algorithms.controllers import HeavyTailedController, StaticController
from src.bounds.tables import fixed_lambda_progress_bound
from src.harness.probe import estimate_progress_probability, onemax_state_at_distance
from src.sampling.power_law import build_power_law
from src.utils.errors import InvalidParameterError


class TestStateAtDistance:
    """Test suite for onemax_state_at_distance."""

    def test_distance(self):
        """Fitness n - d with the zeros first."""
        state = onemax_state_at_distance(10, 3)
        assert state.fitness == 7
        assert state.current.get_bits(np.arange(10)).tolist() == [0] * 3 + [1] * 7

    @pytest.mark.parametrize("d", [0, 11])
    def test_rejects_distance(self, d):
        """d outside [1..n]."""
        with pytest.raises(InvalidParameterError):
            onemax_state_at_distance(10, d)


class TestEstimate:
    """Test suite for estimate_progress_probability."""

    def test_rejects_d_zero(self):
        """The optimum has no progress to measure."""
        with pytest.raises(InvalidParameterError):
            estimate_progress_probability(
                64, 0, StaticController(1.0), 10, np.random.default_rng(0)
            )

    def test_rejects_no_trials(self):
        """At least one trial."""
        with pytest.raises(InvalidParameterError, match="trials"):
            estimate_progress_probability(
                64, 4, StaticController(1.0), 0, np.random.default_rng(0)
            )

    def test_all_zero_parent(self):
        """From the all-zero string every flip is an improvement."""
        estimate = estimate_progress_probability(
            64, 64, StaticController(1.0), 1000, np.random.default_rng(1)
        )
        assert estimate.probability >= 0.6
        assert estimate.trials == 1000
        assert estimate.successes == round(estimate.probability * 1000)

    def test_reproducible(self):
        """The same seed gives the same estimate."""
        controller = HeavyTailedController(build_power_law(2.5, 128))
        first = estimate_progress_probability(
            128, 8, controller, 500, np.random.default_rng(3)
        )
        second = estimate_progress_probability(
            128, 8, controller, 500, np.random.default_rng(3)
        )
        assert first == second

    def test_stderr(self):
        """Binomial standard error of the estimate."""
        estimate = estimate_progress_probability(
            128, 16, StaticController(2.0), 400, np.random.default_rng(4)
        )
        p = estimate.probability
        assert estimate.stderr == pytest.approx(math.sqrt(p * (1 - p) / 400))

    def test_more_distance_more_progress(self):
        """Doubling d does not lower the improvement probability."""
        controller = HeavyTailedController(build_power_law(2.5, 256))
        rng = np.random.default_rng(5)
        near = estimate_progress_probability(256, 4, controller, 3000, rng)
        far = estimate_progress_probability(256, 8, controller, 3000, rng)
        noise = math.hypot(near.stderr, far.stderr)
        assert far.probability >= near.probability - 3 * noise

    def test_above_fixed_lambda_bound(self):
        """A static lambda beats the C' lower bound."""
        n, d, lam = 256, 4, 4.0
        estimate = estimate_progress_probability(
            n, d, StaticController(lam), 3000, np.random.default_rng(6)
        )
        bound = fixed_lambda_progress_bound(n, d, lam)
        assert estimate.probability >= bound - 3 * estimate.stderr
