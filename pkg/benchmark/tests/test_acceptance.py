"""Reproduction checks at full problem sizes against reference means.

These run the full harness and take a long time; they are marked slow and
use every available core.
"""

import math
import os
import sys
from pathlib import Path

import numpy as np
import pytest

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.algorithms.controllers import HeavyTailedController
from src.bounds.tables import progress_bound
from src.harness.csv_io import format_runs_csv
from src.harness.experiment import ExperimentRunner
from src.harness.probe import estimate_progress_probability
from src.models.experiment_config import ExperimentConfig
from src.models.run_record import SummaryRow
from src.sampling.power_law import build_power_law

pytestmark = pytest.mark.slow

WORKERS = os.cpu_count() or 1


def summary(algorithm: dict, n: int, problem: str = "onemax", runs: int = 100):
    """Run one experiment and return its single summary row."""
    config = ExperimentConfig.model_validate(
        {
            "algorithm": algorithm,
            "problem": problem,
            "sizes": [n],
            "runs": runs,
            "base_seed": 2024,
        }
    )
    result = ExperimentRunner(workers=WORKERS, record_wall_time=False).run(config)
    assert result.failed_runs == 0
    (row,) = result.summaries
    return row


def pooled_std(a: SummaryRow, b: SummaryRow) -> float:
    """Root mean square of two deviations."""
    return math.sqrt((a.std_evals_per_n**2 + b.std_evals_per_n**2) / 2)


FAST = {"name": "ollga-fast", "beta": 2.5, "u": "n"}
ONE_FIFTH = {"name": "ollga-onefifth"}


class TestOneMax:
    """Mean evaluations/n on OneMax at n = 2^16."""

    @pytest.fixture(scope="class")
    def rows(self):
        """Summaries of the four compared algorithms."""
        n = 2**16
        return {
            "fast": summary(FAST, n),
            "opo-ea": summary({"name": "opo-ea"}, n),
            "rls": summary({"name": "rls"}, n),
            "onefifth": summary(ONE_FIFTH, n),
        }

    def test_fast(self, rows):
        """Reference mean 11.07, within 15%."""
        assert 9.5 <= rows["fast"].mean_evals_per_n <= 12.7

    def test_one_plus_one_ea(self, rows):
        """Reference mean 17.72."""
        assert 15.0 <= rows["opo-ea"].mean_evals_per_n <= 20.4

    def test_rls(self, rows):
        """Reference mean 10.89."""
        assert 9.3 <= rows["rls"].mean_evals_per_n <= 12.5

    def test_one_fifth(self, rows):
        """Reference mean 6.66; the band absorbs the choice of update factor."""
        assert 5.3 <= rows["onefifth"].mean_evals_per_n <= 8.0

    def test_ordering(self, rows):
        """one-fifth < fast < (1+1) EA."""
        assert (
            rows["onefifth"].mean_evals_per_n
            < rows["fast"].mean_evals_per_n
            < rows["opo-ea"].mean_evals_per_n
        )


class TestMaxSat:
    """Mean evaluations/n on planted MAX-3SAT."""

    def test_fast_and_one_fifth(self):
        """At n = 2^14 the uncapped one-fifth rule loses to fast; capped wins."""
        n = 2**14
        fast = summary(FAST, n, problem="maxsat")
        uncapped = summary(ONE_FIFTH, n, problem="maxsat")
        capped = summary({"name": "ollga-onefifth", "cap": "2ln"}, n, problem="maxsat")
        assert 12.0 <= fast.mean_evals_per_n <= 16.2
        assert uncapped.mean_evals_per_n > fast.mean_evals_per_n
        assert 7.8 <= capped.mean_evals_per_n <= 10.7

    def test_moderate_upper_limit_is_best(self):
        """beta = 2.3 at n = 2^16: u = 32 beats both u = 4 and u = 8192."""
        n = 2**16
        rows = {
            u: summary({"name": "ollga-fast", "beta": 2.3, "u": u}, n, "maxsat")
            for u in (4, 32, 8192)
        }
        best = rows[32]
        for u in (4, 8192):
            gap = rows[u].mean_evals_per_n - best.mean_evals_per_n
            assert gap > pooled_std(rows[u], best)


class TestScaling:
    """Growth of evaluations/n between n = 2^14 and n = 2^18."""

    def test_fast_is_linear_ea_is_not(self):
        """fast grows by less than 12%, the (1+1) EA by more than 20%."""
        small, large = 2**14, 2**18
        fast_growth = (
            summary(FAST, large, runs=20).mean_evals_per_n
            / summary(FAST, small, runs=20).mean_evals_per_n
        )
        ea = {"name": "opo-ea"}
        ea_growth = (
            summary(ea, large, runs=20).mean_evals_per_n
            / summary(ea, small, runs=20).mean_evals_per_n
        )
        assert fast_growth < 1.12
        assert ea_growth > 1.20


class TestReproducibility:
    """Full-size runs replay byte for byte."""

    def test_same_seed_same_csv(self):
        """Two sweeps with the same base seed produce identical runs.csv."""
        config = ExperimentConfig.model_validate(
            {"algorithm": FAST, "sizes": [2**12], "runs": 20, "base_seed": 7}
        )
        first = ExperimentRunner(workers=WORKERS, record_wall_time=False).run(config)
        second = ExperimentRunner(workers=1, record_wall_time=False).run(config)
        assert format_runs_csv(first.records) == format_runs_csv(second.records)


class TestProgressSlope:
    """Empirical progress probability against the d/n cell."""

    def test_log_log_slope(self):
        """For beta = 4 the probability grows linearly in d."""
        n = 1024
        distances = (4, 8, 16, 32)
        controller = HeavyTailedController(build_power_law(4.0, n))
        rng = np.random.default_rng(17)
        probabilities = [
            estimate_progress_probability(n, d, controller, 100_000, rng).probability
            for d in distances
        ]
        slope = np.polyfit(np.log(distances), np.log(probabilities), 1)[0]
        assert slope == pytest.approx(1.0, abs=0.15)

        bound = progress_bound(4.0, n, n, distances[0])
        assert bound.expression == "Ω(d/n)"
        assert probabilities[0] >= bound.value * 0.1
