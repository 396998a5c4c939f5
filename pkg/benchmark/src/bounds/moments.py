"""Moments of the power-law population size."""

import math
from enum import StrEnum

import numpy as np

from ..sampling.power_law import power_weights
from ..utils.errors import InvalidParameterError


class LambdaMomentClass(StrEnum):
    """Growth of E[lambda] in the upper limit u."""

    CONSTANT = "Θ(1)"
    LOG = "Θ(log u)"
    POLY = "Θ(u^(2−β))"
    LINEAR_OVER_LOG = "Θ(u/log u)"
    LINEAR = "Θ(u)"


def _check(beta: float, u: int) -> None:
    if not math.isfinite(beta):
        raise InvalidParameterError(f"beta must be finite, got {beta}")
    if u < 1:
        raise InvalidParameterError(f"u must be at least 1, got {u}")


def normalizing_constant(beta: float, u: int) -> float:
    """C_{beta,u} = 1 / sum_{i=1}^{u} i^(-beta)."""
    _check(beta, u)
    return 1.0 / math.fsum(power_weights(beta, u).tolist())


def expected_lambda_exact(beta: float, u: int) -> float:
    """E[lambda] = C_{beta,u} sum_{i=1}^{u} i^(1-beta), summed directly."""
    _check(beta, u)
    weights = power_weights(beta, u)
    values = weights * np.arange(1, u + 1, dtype=np.float64)
    return math.fsum(values.tolist()) / math.fsum(weights.tolist())


def expected_lambda_bracket(beta: float, u: int) -> tuple[float, float]:
    """Return (C, C (beta-1)/(beta-2)), which enclose E[lambda] for beta > 2.

    Raises:
        InvalidParameterError: If beta <= 2.
    """
    if not beta > 2:
        raise InvalidParameterError(f"bracket requires beta > 2, got {beta}")
    c = normalizing_constant(beta, u)
    return c, c * (beta - 1) / (beta - 2)


def expected_lambda_class(beta: float) -> LambdaMomentClass:
    """Classify how E[lambda] grows with u for a given beta."""
    if not math.isfinite(beta):
        raise InvalidParameterError(f"beta must be finite, got {beta}")
    if beta > 2:
        return LambdaMomentClass.CONSTANT
    if beta == 2:
        return LambdaMomentClass.LOG
    if beta > 1:
        return LambdaMomentClass.POLY
    if beta == 1:
        return LambdaMomentClass.LINEAR_OVER_LOG
    return LambdaMomentClass.LINEAR
