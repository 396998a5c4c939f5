"""Mutation strength of the (1+(lambda,lambda)) GA.

The strength l is Bin(n, lambda/n) conditioned on l >= 1, realised by
rejection: an iteration with l = 0 would only produce copies of the parent.
"""

import math

import numpy as np

from ..utils.errors import InvalidParameterError


def _check_lambda(n: int, lam: float) -> None:
    if n < 1:
        raise InvalidParameterError(f"n must be at least 1, got {n}")
    if not (0.0 < lam <= n):
        raise InvalidParameterError(f"lambda must lie in (0, {n}], got {lam}")


def sample_ell_conditioned(n: int, lam: float, rng: np.random.Generator) -> int:
    """Sample l ~ Bin(n, lam/n) conditioned on l >= 1.

    Args:
        n: Number of trials (problem size).
        lam: Real mean parameter, 0 < lam <= n.
        rng: Random stream owned by the caller.

    Returns:
        Integer in [1..n].

    Raises:
        InvalidParameterError: If lam is outside (0, n].
    """
    _check_lambda(n, lam)
    p = lam / n
    while True:
        ell = int(rng.binomial(n, p))
        if ell:
            return ell


def expected_ell_conditioned(n: int, lam: float) -> float:
    """Return E[l | l >= 1] = lam / (1 - (1 - lam/n)^n)."""
    _check_lambda(n, lam)
    p = lam / n
    if p == 1.0:
        return float(lam)
    # 1 - (1-p)^n, accurate for tiny p
    return lam / -math.expm1(n * math.log1p(-p))
