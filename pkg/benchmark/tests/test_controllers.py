"""Tests for the lambda controllers."""

import math
import sys
from pathlib import Path

import numpy as np
import pytest

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.algorithms.controllers import (
    ControllerState,
    FitnessDependentController,
    HeavyTailedController,
    OneFifthController,
    StaticController,
    controller_next_lambda,
    one_fifth_cap,
    optimal_static_lambda,
)
from src.sampling.power_law import build_power_law
from src.utils.errors import InvalidParameterError


@pytest.fixture
def rng():
    """Return a seeded random stream."""
    return np.random.default_rng(0)


class TestStaticController:
    """Test suite for StaticController and the optimal static lambda."""

    def test_constant(self, rng):
        """Always the configured value."""
        controller = StaticController(3.5)
        state = ControllerState(n=100, current_fitness=10)
        assert {controller_next_lambda(controller, state, rng) for _ in range(5)} == {
            3.5
        }

    def test_rejects_below_one(self):
        """Lambda below 1 is invalid."""
        with pytest.raises(InvalidParameterError):
            StaticController(0.5)

    def test_optimal_static_lambda(self):
        """2 sqrt(lnp n lnp lnp n / lnp lnp lnp n) with lnp x = ln(x + 1)."""
        n = 65536
        lnp = math.log1p
        expected = 2 * math.sqrt(lnp(n) * lnp(lnp(n)) / lnp(lnp(lnp(n))))
        assert optimal_static_lambda(n) == pytest.approx(expected, rel=1e-15)
        assert optimal_static_lambda(n) > 1
        assert optimal_static_lambda(2**20) > optimal_static_lambda(2**10)

    def test_one_fifth_cap(self):
        """2 ln(n + 1)."""
        assert one_fifth_cap(100) == pytest.approx(2 * math.log(101))


class TestFitnessDependentController:
    """Test suite for FitnessDependentController."""

    def test_example(self, rng):
        """n = 100, f = 99 gives sqrt(100)."""
        controller = FitnessDependentController()
        lam = controller.next_lambda(ControllerState(100, 99), rng)
        assert lam == pytest.approx(10.0)

    def test_far_from_optimum_is_near_one(self, rng):
        """f = 0 gives exactly 1."""
        assert FitnessDependentController().next_lambda(
            ControllerState(50, 0), rng
        ) == pytest.approx(1.0)

    def test_undefined_at_optimum(self, rng):
        """Asking at the optimum is an error."""
        with pytest.raises(InvalidParameterError, match="below n"):
            FitnessDependentController().next_lambda(ControllerState(10, 10), rng)


class TestOneFifthController:
    """Test suite for OneFifthController."""

    def test_first_call_returns_initial(self, rng):
        """No update before the first iteration."""
        controller = OneFifthController()
        assert controller.next_lambda(ControllerState(100, 0, None), rng) == 1.0

    def test_success_divides_by_factor(self, rng):
        """lambda = 2, success: 2 / 1.5 = 4/3."""
        controller = OneFifthController(initial=2.0)
        lam = controller.next_lambda(ControllerState(100, 0, True), rng)
        assert lam == pytest.approx(4 / 3, rel=1e-15)

    def test_failure_multiplies_by_fourth_root(self, rng):
        """lambda = 2, failure: 2 * 1.5^(1/4) = 2.2134."""
        controller = OneFifthController(initial=2.0)
        lam = controller.next_lambda(ControllerState(100, 0, False), rng)
        assert lam == pytest.approx(2 * 1.5**0.25, rel=1e-15)
        assert lam == pytest.approx(2.2134, abs=1e-4)

    def test_clamped_below_at_one(self, rng):
        """Successes never push lambda under 1."""
        controller = OneFifthController()
        for _ in range(10):
            lam = controller.next_lambda(ControllerState(100, 0, True), rng)
        assert lam == 1.0

    def test_clamped_at_cap(self, rng):
        """Failures never push lambda above the cap."""
        cap = one_fifth_cap(100)
        controller = OneFifthController(cap=cap)
        for _ in range(200):
            lam = controller.next_lambda(ControllerState(100, 0, False), rng)
        assert lam == pytest.approx(cap)

    def test_uncapped_clamps_at_n(self, rng):
        """Without a cap, n is the upper limit."""
        controller = OneFifthController()
        for _ in range(500):
            lam = controller.next_lambda(ControllerState(16, 0, False), rng)
        assert lam == 16.0

    def test_reset(self, rng):
        """reset restores the initial lambda."""
        controller = OneFifthController(initial=1.0)
        for _ in range(20):
            controller.next_lambda(ControllerState(100, 0, False), rng)
        assert controller.lam > 1.0
        controller.reset()
        assert controller.lam == 1.0

    def test_one_in_five_pattern_is_stationary(self, rng):
        """One success and four failures return lambda to its start."""
        controller = OneFifthController(initial=10.0)
        controller.next_lambda(ControllerState(1000, 0, None), rng)
        for _ in range(50):
            for outcome in (True, False, False, False, False):
                lam = controller.next_lambda(ControllerState(1000, 0, outcome), rng)
        assert lam == pytest.approx(10.0, rel=1e-9)

    def test_random_one_fifth_success_has_zero_drift(self):
        """With success probability 1/5, the mean change of log lambda is zero."""
        rng = np.random.default_rng(11)
        n = 10**300
        start = 1e150
        controller = OneFifthController(initial=start)
        controller.next_lambda(ControllerState(n, 0, None), rng)
        steps = 100_000
        successes = rng.random(steps) < 0.2
        lam = start
        for outcome in successes:
            lam = controller.next_lambda(ControllerState(n, 0, bool(outcome)), rng)
        drift = (math.log(lam) - math.log(start)) / steps
        step_sd = math.sqrt(
            0.2 * math.log(1.5) ** 2 + 0.8 * (0.25 * math.log(1.5)) ** 2
        )
        assert abs(drift) < 5 * step_sd / math.sqrt(steps)

    @pytest.mark.parametrize(
        "kwargs", [{"update_factor": 1.0}, {"cap": 0.5}, {"initial": 0.5}]
    )
    def test_rejects_invalid_parameters(self, kwargs):
        """F must exceed 1; cap and initial must be at least 1."""
        with pytest.raises(InvalidParameterError):
            OneFifthController(**kwargs)


class TestHeavyTailedController:
    """Test suite for HeavyTailedController."""

    def test_u_one_always_one(self, rng):
        """A single-point distribution always gives 1."""
        controller = HeavyTailedController(build_power_law(2.5, 1))
        state = ControllerState(100, 0)
        assert {controller.next_lambda(state, rng) for _ in range(100)} == {1.0}

    def test_fresh_draw_each_call(self, rng):
        """Consecutive calls are independent draws within [1..u]."""
        controller = HeavyTailedController(build_power_law(1.0, 50))
        state = ControllerState(100, 0)
        draws = [controller.next_lambda(state, rng) for _ in range(500)]
        assert len(set(draws)) > 5
        assert min(draws) >= 1
        assert max(draws) <= 50
