"""Sampling of the population size and the mutation strength."""

from .mutation_strength import expected_ell_conditioned, sample_ell_conditioned
from .power_law import PowerLawDist, build_power_law, sample_lambda

__all__ = [
    "PowerLawDist",
    "build_power_law",
    "sample_lambda",
    "sample_ell_conditioned",
    "expected_ell_conditioned",
]
