"""Truncated power-law distribution over the population size.

Pr[lambda = i] = C * i^(-beta) for i in [1..u], where C is the reciprocal of
the generalized harmonic sum. Sampling is inverse-transform on a precomputed
CDF, so one draw costs a single uniform variate plus a binary search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from ..utils.errors import InvalidParameterError


@dataclass(frozen=True, eq=False)
class PowerLawDist:
    """Immutable truncated power law on [1..u].

    Attributes:
        beta: Power-law exponent (any finite real).
        u: Upper limit of the support.
        pmf: Probabilities of the values 1..u (index i holds value i + 1).
        cdf: Cumulative probabilities; the last entry is exactly 1.0.
        norm_const: Normalization coefficient C_{beta,u}.
    """

    beta: float
    u: int
    pmf: npt.NDArray[np.float64]
    cdf: npt.NDArray[np.float64]
    norm_const: float

    def mean(self) -> float:
        """Return E[lambda] computed from the stored pmf."""
        values = np.arange(1, self.u + 1, dtype=np.float64)
        return math.fsum((values * self.pmf).tolist())

    def __repr__(self) -> str:
        """Human-readable representation for debugging."""
        return (
            f"PowerLawDist(beta={self.beta:g}, u={self.u}, "
            f"norm_const={self.norm_const:.6g})"
        )


def power_weights(beta: float, u: int) -> npt.NDArray[np.float64]:
    """Return the unnormalized weights i^(-beta) for i in [1..u]."""
    return np.power(np.arange(1, u + 1, dtype=np.float64), -float(beta))


def build_power_law(beta: float, u: int) -> PowerLawDist:
    """Construct the truncated power law with exponent beta on [1..u].

    The normalization sum is computed with math.fsum (exactly rounded), never
    with the harmonic-sum approximations, so those stay usable as independent
    oracles.

    Args:
        beta: Power-law exponent.
        u: Upper limit of the support, at least 1.

    Returns:
        PowerLawDist with read-only pmf and cdf arrays.

    Raises:
        InvalidParameterError: If u < 1, u is not an integer, or beta is not
            finite.
    """
    if isinstance(u, bool) or not isinstance(u, int | np.integer):
        raise InvalidParameterError(f"u must be an integer, got {u!r}")
    u = int(u)
    if u < 1:
        raise InvalidParameterError(f"u must be at least 1, got {u}")
    if not math.isfinite(beta):
        raise InvalidParameterError(f"beta must be finite, got {beta}")

    weights = power_weights(beta, u)
    total = math.fsum(weights.tolist())
    norm_const = 1.0 / total

    pmf = weights / total
    cdf = np.cumsum(weights) / total
    np.minimum(cdf, 1.0, out=cdf)
    cdf[-1] = 1.0

    pmf.setflags(write=False)
    cdf.setflags(write=False)
    return PowerLawDist(
        beta=float(beta), u=u, pmf=pmf, cdf=cdf, norm_const=norm_const
    )


def sample_lambda(dist: PowerLawDist, rng: np.random.Generator) -> int:
    """Draw one population size from the distribution.

    Args:
        dist: Distribution to sample from.
        rng: Random stream owned by the caller.

    Returns:
        Integer in [1..dist.u].
    """
    if dist.u == 1:
        return 1
    r = rng.random()
    return int(np.searchsorted(dist.cdf, r, side="right")) + 1


def sample_lambdas(
    dist: PowerLawDist, rng: np.random.Generator, size: int
) -> npt.NDArray[np.int64]:
    """Draw `size` independent population sizes at once."""
    r = rng.random(size)
    return np.searchsorted(dist.cdf, r, side="right").astype(np.int64) + 1
