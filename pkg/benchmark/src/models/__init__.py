"""Data models for runs, summaries and experiment configuration.

- RunBudget: termination criteria of a single run
- RunRecord: outcome of a single run
- SummaryRow: aggregate of all runs of one (algorithm, problem, n) group
- AlgorithmSpec, ExperimentConfig, SweepConfig: validated configuration
"""

from .experiment_config import AlgorithmSpec, ExperimentConfig, SweepConfig
from .run_record import RunBudget, RunRecord, SummaryRow

__all__ = [
    "RunBudget",
    "RunRecord",
    "SummaryRow",
    "AlgorithmSpec",
    "ExperimentConfig",
    "SweepConfig",
]
