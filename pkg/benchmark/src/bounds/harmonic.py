"""Partial sums of the generalized harmonic series and their bounds.

The sums sum_{i=1}^{k} i^(-alpha) appear throughout the power-law analysis:
the normalizing constant of the lambda distribution and its moments are all
of this form. The closed-form bounds here are the integral estimates used to
classify them; `harmonic_sum_exact` is the oracle they are checked against.
"""

import math

import numpy as np

from ..utils.errors import InvalidParameterError


def harmonic_sum_exact(alpha: float, k: int) -> float:
    """Return sum_{i=1}^{k} i^(-alpha), summed with full precision.

    Args:
        alpha: Exponent, any real.
        k: Number of terms, at least 1.

    Raises:
        InvalidParameterError: If k < 1.
    """
    if k < 1:
        raise InvalidParameterError(f"k must be at least 1, got {k}")
    terms = np.arange(1, k + 1, dtype=np.float64) ** -alpha
    return math.fsum(terms.tolist())


def harmonic_lower_bound(alpha: float, s: float) -> float:
    """Lower bound on sum_{i=1}^{ceil(s)} i^(-alpha).

    Returns (s^(1-alpha) - 1) / (1 - alpha), or ln(s) when alpha = 1.

    Raises:
        InvalidParameterError: If s < 1.
    """
    if s < 1:
        raise InvalidParameterError(f"s must be at least 1, got {s}")
    if alpha == 1:
        return math.log(s)
    return (s ** (1 - alpha) - 1) / (1 - alpha)


def harmonic_upper_bound(alpha: float, u: int) -> float:
    """Upper bound on sum_{i=1}^{u} i^(-alpha).

    The bound depends on the sign and size of alpha:

    - alpha < 0: u^(1-alpha) (2-alpha) / (1-alpha)
    - 0 <= alpha < 1: u^(1-alpha) / (1-alpha)
    - alpha = 1: ln(u) + 1
    - alpha > 1: alpha / (alpha-1), independent of u

    Raises:
        InvalidParameterError: If u < 1.
    """
    if u < 1:
        raise InvalidParameterError(f"u must be at least 1, got {u}")
    if alpha < 0:
        return u ** (1 - alpha) * (2 - alpha) / (1 - alpha)
    if alpha < 1:
        return u ** (1 - alpha) / (1 - alpha)
    if alpha == 1:
        return math.log(u) + 1
    return alpha / (alpha - 1)


def bernoulli_amplification(p: float, lam: float) -> tuple[float, float]:
    """Return both sides of 1 - (1-p)^lam >= lam p / (1 + lam p).

    The left side is the chance that at least one of lam independent trials
    with success probability p succeeds.

    Raises:
        InvalidParameterError: If p is outside [0, 1] or lam <= 0.
    """
    if not 0.0 <= p <= 1.0:
        raise InvalidParameterError(f"p must lie in [0, 1], got {p}")
    if not lam > 0:
        raise InvalidParameterError(f"lambda must be positive, got {lam}")
    lhs = 1.0 if p == 1.0 else -math.expm1(lam * math.log1p(-p))
    rhs = lam * p / (1 + lam * p)
    return lhs, rhs
