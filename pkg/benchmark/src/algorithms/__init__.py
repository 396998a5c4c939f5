"""Optimization loops and lambda controllers."""

from .baselines import run_one_plus_one_ea, run_rls
from .controllers import (
    ControllerState,
    FitnessDependentController,
    HeavyTailedController,
    LambdaController,
    OneFifthController,
    StaticController,
    controller_next_lambda,
    one_fifth_cap,
    optimal_static_lambda,
)
from .ollga import offspring_count, ollga_iteration, run_ollga
from .run_loop import default_budget
from .trace import IterationObserver, IterationTrace

__all__ = [
    "ControllerState",
    "LambdaController",
    "StaticController",
    "FitnessDependentController",
    "OneFifthController",
    "HeavyTailedController",
    "controller_next_lambda",
    "optimal_static_lambda",
    "one_fifth_cap",
    "IterationTrace",
    "IterationObserver",
    "offspring_count",
    "ollga_iteration",
    "run_ollga",
    "run_rls",
    "run_one_plus_one_ea",
    "default_budget",
]
