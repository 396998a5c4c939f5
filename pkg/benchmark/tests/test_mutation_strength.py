"""Tests for the conditioned mutation strength."""

import sys
from pathlib import Path

import numpy as np
import pytest

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.sampling.mutation_strength import (
    expected_ell_conditioned,
    sample_ell_conditioned,
)
from src.utils.errors import InvalidParameterError


class TestSampleEllConditioned:
    """Test suite for sample_ell_conditioned."""

    def test_n_one_always_one(self):
        """Bin(1, 1) has no mass at zero."""
        rng = np.random.default_rng(0)
        assert {sample_ell_conditioned(1, 1.0, rng) for _ in range(50)} == {1}

    def test_never_zero_and_at_most_n(self):
        """Every draw lies in [1..n]."""
        rng = np.random.default_rng(1)
        for n, lam in [(10, 0.01), (10, 10.0), (1000, 3.7), (2, 1.5)]:
            draws = [sample_ell_conditioned(n, lam, rng) for _ in range(2000)]
            assert min(draws) >= 1
            assert max(draws) <= n

    def test_full_rate_flips_everything(self):
        """lambda = n means every bit flips."""
        rng = np.random.default_rng(2)
        assert sample_ell_conditioned(17, 17.0, rng) == 17

    def test_empirical_mean(self):
        """(n=100, lambda=1): mean close to 1/(1 - 0.99^100) = 1.57737."""
        rng = np.random.default_rng(3)
        draws = [sample_ell_conditioned(100, 1.0, rng) for _ in range(200_000)]
        target = 1 / (1 - 0.99**100)
        assert target == pytest.approx(1.57737, abs=1e-5)
        assert abs(np.mean(draws) - target) < 0.01

    def test_non_integer_lambda_allowed(self):
        """Real lambda values from the one-fifth rule are valid."""
        rng = np.random.default_rng(4)
        assert sample_ell_conditioned(50, 2.2134, rng) >= 1

    @pytest.mark.parametrize("lam", [0.0, -1.0, 100.5])
    def test_rejects_out_of_range_lambda(self, lam):
        """lambda must lie in (0, n]."""
        with pytest.raises(InvalidParameterError, match="lambda"):
            sample_ell_conditioned(100, lam, np.random.default_rng(0))


class TestExpectedEllConditioned:
    """Test suite for expected_ell_conditioned."""

    def test_closed_form(self):
        """lambda / (1 - (1 - lambda/n)^n)."""
        assert expected_ell_conditioned(100, 1.0) == pytest.approx(
            1 / (1 - 0.99**100), rel=1e-12
        )
        assert expected_ell_conditioned(64, 8.0) == pytest.approx(
            8 / (1 - (1 - 8 / 64) ** 64), rel=1e-12
        )

    def test_full_rate(self):
        """lambda = n gives exactly n."""
        assert expected_ell_conditioned(5, 5.0) == 5.0

    def test_tiny_rate_approaches_one(self):
        """For lambda -> 0 the conditioned mean tends to 1."""
        assert expected_ell_conditioned(10**6, 1e-6) == pytest.approx(1.0, abs=1e-6)

    def test_at_least_lambda(self):
        """Conditioning on l >= 1 can only raise the mean."""
        for n, lam in [(10, 0.5), (100, 3.0), (1000, 40.0)]:
            assert expected_ell_conditioned(n, lam) >= lam
