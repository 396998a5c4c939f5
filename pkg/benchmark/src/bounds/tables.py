"""Progress-probability and runtime bounds as executable lookups.

Each asymptotic result is returned as an AsymptoticBound: the printed
formula, the (beta, u) regime that selected it, and a numeric evaluation
with every unknown constant set to 1. Threshold comparisons are done in
real arithmetic. A tie with sqrt(n/d) belongs to the small-u column of the
progress bounds; a tie with the runtime threshold belongs to the large-u row.
"""

import math
from collections.abc import Callable
from dataclasses import dataclass, field

from ..utils.errors import InvalidParameterError
from .moments import expected_lambda_exact

# (1/e)(1 - exp(-exp(-3/2)))
C_PRIME = math.exp(-1.0) * -math.expm1(-math.exp(-1.5))


@dataclass(frozen=True)
class AnalysisConstants:
    """Constants of the progress analysis.

    Only C' has a known value. The remaining constants exist but are not
    given explicitly; they are kept as named placeholders equal to 1 so that
    numeric evaluations have something to multiply by.

    Attributes:
        c_prime: Lower bound on the probability that a crossover offspring
            of a good mutant is better than the parent.
        placeholders: Existence constants by name, all 1.
    """

    c_prime: float = C_PRIME
    placeholders: dict[str, float] = field(
        default_factory=lambda: {"gamma1": 1.0, "gamma2": 1.0, "gamma": 1.0}
    )

    @property
    def c(self) -> float:
        """C = C'/3, the constant of the two-regime fixed-lambda bound."""
        return self.c_prime / 3.0


ANALYSIS_CONSTANTS = AnalysisConstants()


@dataclass(frozen=True)
class Regime:
    """A table cell selector: a beta band and a condition on u."""

    beta_range: str
    u_condition: str

    def __str__(self) -> str:
        return f"beta {self.beta_range}, {self.u_condition}"


@dataclass(frozen=True)
class AsymptoticBound:
    """A bound from one table cell.

    Attributes:
        expression: Formula in n, u, beta and d, e.g. ``Ω(d·u^1/n)``.
        regime: The cell the parameters fell into.
        numeric_eval: Evaluates the formula at the given parameters with
            unknown constants set to 1.
    """

    expression: str
    regime: Regime
    numeric_eval: Callable[[], float] = field(repr=False, compare=False)

    @property
    def value(self) -> float:
        """The formula evaluated numerically."""
        return self.numeric_eval()

    def __str__(self) -> str:
        return f"{self.expression}  [{self.regime}]"


def _log(x: float) -> float:
    """Natural log clamped below at 1, as used inside O- and Ω-terms."""
    return math.log(x) if x > math.e else 1.0


def _beta_band(beta: float) -> str:
    if not math.isfinite(beta):
        raise InvalidParameterError(f"beta must be finite, got {beta}")
    if beta < 1:
        return "<1"
    if beta == 1:
        return "=1"
    if beta < 3:
        return "(1,3)"
    if beta == 3:
        return "=3"
    return ">3"


def progress_bound(beta: float, u: int, n: int, d: int) -> AsymptoticBound:
    """Lower bound on the probability of improving in one iteration.

    The cell depends on beta and on whether u exceeds sqrt(n/d), the
    population size beyond which a larger lambda stops helping.

    Args:
        beta: Power-law exponent.
        u: Upper limit of the lambda distribution.
        n: Problem size.
        d: Distance of the current point to the optimum, in [1..n].

    Raises:
        InvalidParameterError: If d is outside [1..n] or u < 1.
    """
    if n < 1:
        raise InvalidParameterError(f"n must be at least 1, got {n}")
    if not 1 <= d <= n:
        raise InvalidParameterError(f"d must lie in [1..{n}], got {d}")
    if u < 1:
        raise InvalidParameterError(f"u must be at least 1, got {u}")

    band = _beta_band(beta)
    s = math.sqrt(n / d)
    small = u <= s
    regime = Regime(band, "u <= sqrt(n/d)" if small else "u > sqrt(n/d)")

    if band == ">3":
        return AsymptoticBound("Ω(d/n)", Regime(band, "any u"), lambda: d / n)
    if band == "<1":
        if small:
            return AsymptoticBound("Ω(d·u²/n)", regime, lambda: d * u * u / n)
        return AsymptoticBound("Ω(1)", regime, lambda: 1.0)
    if band == "=1":
        if small:
            return AsymptoticBound(
                "Ω(d·u²/(n·log u))", regime, lambda: d * u * u / (n * _log(u))
            )
        return AsymptoticBound(
            "≥ (1 + ln u − ln sqrt(n/d))/(36·ln u)",
            regime,
            lambda: (1 + math.log(u) - math.log(s)) / (36 * math.log(u)),
        )
    if band == "(1,3)":
        if small:
            return AsymptoticBound(
                f"Ω(d·u^{3 - beta:g}/n)", regime, lambda: d * u ** (3 - beta) / n
            )
        return AsymptoticBound(
            f"Ω(sqrt(n/d)^{1 - beta:g})", regime, lambda: s ** (1 - beta)
        )
    if small:
        return AsymptoticBound("Ω(d·log(u)/n)", regime, lambda: d * _log(u) / n)
    return AsymptoticBound(
        "Ω((log(n/d) + 1)/(n/d))", regime, lambda: (math.log(n / d) + 1) / (n / d)
    )


def runtime_threshold(beta: float, n: int) -> float | None:
    """The value of u separating the two rows of the runtime table.

    Returns None for beta > 3, where the bound does not depend on u.
    """
    band = _beta_band(beta)
    ln_n = math.log(n)
    if band == "<1":
        return math.sqrt(ln_n)
    if band == "=1":
        return math.sqrt(ln_n * math.log(ln_n))
    if band == "(1,3)":
        return ln_n ** (1 / (3 - beta))
    if band == "=3":
        return n ** (1 / math.log(ln_n))
    return None


def runtime_bound(
    beta: float, u: int, n: int
) -> tuple[AsymptoticBound, AsymptoticBound]:
    """Upper bounds on expected iterations and expected fitness evaluations.

    Args:
        beta: Power-law exponent.
        u: Upper limit of the lambda distribution.
        n: Problem size, at least 3.

    Returns:
        (ti, tf): the iteration bound and the evaluation bound.

    Raises:
        InvalidParameterError: If n < 3 or u < 1.
    """
    if n < 3:
        raise InvalidParameterError(f"runtime bounds need n >= 3, got {n}")
    if u < 1:
        raise InvalidParameterError(f"u must be at least 1, got {u}")

    band = _beta_band(beta)
    if band == ">3":
        regime = Regime(band, "any u")
        bound = AsymptoticBound("O(n·log n)", regime, lambda: n * _log(n))
        return bound, bound

    threshold = runtime_threshold(beta, n)
    assert threshold is not None
    large = u >= threshold
    condition = f"u {'>=' if large else '<'} {threshold:.4g}"
    regime = Regime(band, condition)
    spread = _log(n / (u * u))

    if band == "<1":
        if large:
            return (
                AsymptoticBound("O(n)", regime, lambda: float(n)),
                AsymptoticBound("O(n·u)", regime, lambda: float(n * u)),
            )
        return (
            AsymptoticBound(
                "O(n/u²·log(n/u²))", regime, lambda: n / (u * u) * spread
            ),
            AsymptoticBound("O(n/u·log(n/u²))", regime, lambda: n / u * spread),
        )
    if band == "=1":
        if large:
            return (
                AsymptoticBound("O(n)", regime, lambda: float(n)),
                AsymptoticBound("O(n·u/log u)", regime, lambda: n * u / _log(u)),
            )
        return (
            AsymptoticBound(
                "O(n/u²·log(n/u²)·log u)",
                regime,
                lambda: n / (u * u) * spread * _log(u),
            ),
            AsymptoticBound("O(n/u·log(n/u²))", regime, lambda: n / u * spread),
        )
    if band == "=3":
        if large:
            bound = AsymptoticBound(
                "O(n·log log u)", regime, lambda: n * _log(_log(u))
            )
        else:
            bound = AsymptoticBound(
                "O(n/log u·log(n/u²))", regime, lambda: n / _log(u) * spread
            )
        return bound, bound

    # beta in (1, 3): the iteration bound is shared, the evaluation bound
    # splits at beta = 2
    exponent = 3 - beta
    if large:
        ti = AsymptoticBound("O(n)", regime, lambda: float(n))
    else:
        ti = AsymptoticBound(
            f"O(n/u^{exponent:g}·log(n/u²))",
            regime,
            lambda: n / u**exponent * spread,
        )
    if beta < 2:
        tf_regime = Regime("(1,2)", condition)
        if large:
            tf = AsymptoticBound(
                f"O(n·u^{2 - beta:g})", tf_regime, lambda: n * u ** (2 - beta)
            )
        else:
            tf = AsymptoticBound(
                "O(n/u·log(n/u²))", tf_regime, lambda: n / u * spread
            )
    elif beta == 2:
        tf_regime = Regime("=2", condition)
        if large:
            tf = AsymptoticBound("O(n·log u)", tf_regime, lambda: n * _log(u))
        else:
            tf = AsymptoticBound(
                "O(n·log u/u·log(n/u²))",
                tf_regime,
                lambda: n * _log(u) / u * spread,
            )
    else:
        tf = AsymptoticBound(
            ti.expression, Regime("(2,3)", condition), ti.numeric_eval
        )
    return ti, tf


def leading_constant(beta: float) -> float:
    """Leading constant of the O(n) evaluation bound for beta in (2, 3).

    328 beta (5 - beta) / ((3 - beta)(beta - 2)).

    Raises:
        InvalidParameterError: If beta is outside (2, 3).
    """
    if not 2 < beta < 3:
        raise InvalidParameterError(f"beta must lie in (2, 3), got {beta}")
    return 328 * beta * (5 - beta) / ((3 - beta) * (beta - 2))


def iteration_leading_constant(
    beta: float, constants: AnalysisConstants = ANALYSIS_CONSTANTS
) -> float:
    """Leading constant of the O(n) iteration bound for beta in (1, 3).

    12 beta (5 - beta) / ((3 - beta)(beta - 1) C').

    Raises:
        InvalidParameterError: If beta is outside (1, 3).
    """
    if not 1 < beta < 3:
        raise InvalidParameterError(f"beta must lie in (1, 3), got {beta}")
    return 12 * beta * (5 - beta) / ((3 - beta) * (beta - 1) * constants.c_prime)


def _check_distance(n: int, d: int, lam: float) -> None:
    if not 1 <= d <= n:
        raise InvalidParameterError(f"d must lie in [1..{n}], got {d}")
    if not lam >= 1:
        raise InvalidParameterError(f"lambda must be at least 1, got {lam}")


def fixed_lambda_progress_bound(
    n: int, d: int, lam: float, constants: AnalysisConstants = ANALYSIS_CONSTANTS
) -> float:
    """C' (1 - (1 - d/n)^(lam²/2)): improvement probability for a fixed lambda."""
    _check_distance(n, d, lam)
    if d == n:
        return constants.c_prime
    return constants.c_prime * -math.expm1(lam * lam / 2 * math.log1p(-d / n))


def fixed_lambda_progress_estimate(
    n: int, d: int, lam: float, constants: AnalysisConstants = ANALYSIS_CONSTANTS
) -> float:
    """Two-regime simplification of `fixed_lambda_progress_bound`.

    C d lam² / n while lam <= sqrt(n/d), and C afterwards, with C = C'/3.
    It never exceeds the unsimplified bound.
    """
    _check_distance(n, d, lam)
    if lam <= math.sqrt(n / d):
        return constants.c * d * lam * lam / n
    return constants.c


def lower_bound_iterations(beta: float, u: int, n: int) -> float:
    """n / (2 E[lambda]): expected iterations needed from a random start.

    No choice of the lambda distribution can make the expected number of
    iterations smaller than this on OneMax.
    """
    if n < 1:
        raise InvalidParameterError(f"n must be at least 1, got {n}")
    return n / (2 * expected_lambda_exact(beta, u))
