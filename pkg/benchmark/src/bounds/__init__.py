"""Analytical bounds on the heavy-tailed (1+(lambda,lambda)) GA."""

from .harmonic import (
    bernoulli_amplification,
    harmonic_lower_bound,
    harmonic_sum_exact,
    harmonic_upper_bound,
)
from .moments import (
    LambdaMomentClass,
    expected_lambda_bracket,
    expected_lambda_class,
    expected_lambda_exact,
    normalizing_constant,
)
from .tables import (
    ANALYSIS_CONSTANTS,
    C_PRIME,
    AnalysisConstants,
    AsymptoticBound,
    Regime,
    fixed_lambda_progress_bound,
    fixed_lambda_progress_estimate,
    iteration_leading_constant,
    leading_constant,
    lower_bound_iterations,
    progress_bound,
    runtime_bound,
    runtime_threshold,
)

__all__ = [
    "harmonic_sum_exact",
    "harmonic_lower_bound",
    "harmonic_upper_bound",
    "bernoulli_amplification",
    "LambdaMomentClass",
    "normalizing_constant",
    "expected_lambda_exact",
    "expected_lambda_bracket",
    "expected_lambda_class",
    "C_PRIME",
    "ANALYSIS_CONSTANTS",
    "AnalysisConstants",
    "AsymptoticBound",
    "Regime",
    "progress_bound",
    "runtime_bound",
    "runtime_threshold",
    "leading_constant",
    "iteration_leading_constant",
    "fixed_lambda_progress_bound",
    "fixed_lambda_progress_estimate",
    "lower_bound_iterations",
]
