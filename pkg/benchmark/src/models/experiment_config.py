"""Validated configuration of experiments and sweeps.

Configurations come from the command line or from a JSON sweep file and are
validated with pydantic before any run starts.
"""

import json
import math
from pathlib import Path
from typing import Literal, Self

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    PositiveInt,
    ValidationError,
    field_validator,
    model_validator,
)

from ..utils.errors import ConfigError

AlgorithmName = Literal[
    "rls",
    "opo-ea",
    "ollga-static",
    "ollga-fitdep",
    "ollga-onefifth",
    "ollga-fast",
]
ProblemName = Literal["onemax", "maxsat"]
UPolicy = Literal["n", "2ln"] | PositiveInt
CapPolicy = Literal["none", "2ln"] | float

MAX_SEED = 2**64 - 1
DEFAULT_BUDGET_FACTOR = 10_000


def log_cap(n: int) -> float:
    """2 ln(n + 1)."""
    return 2.0 * math.log(n + 1)


class AlgorithmSpec(BaseModel):
    """Which algorithm to run and how its lambda is chosen.

    Parameters that do not apply to the selected algorithm are ignored.

    Attributes:
        name: Algorithm identifier.
        beta: Power-law exponent of ollga-fast.
        u: Upper limit of ollga-fast: 'n', '2ln' (floor of 2 ln(n+1)) or an
            integer.
        cap: Upper limit on lambda for ollga-onefifth: 'none', '2ln' or a
            number.
        update_factor: One-fifth rule factor F.
        lambda_value: Fixed lambda of ollga-static; the asymptotically
            optimal value when omitted.
        success_on_equal: Count equal-fitness acceptance as a success for the
            one-fifth rule.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    name: AlgorithmName
    beta: float = 2.5
    u: UPolicy = "n"
    cap: CapPolicy = "none"
    update_factor: float = Field(default=1.5, gt=1.0)
    lambda_value: float | None = Field(default=None, ge=1.0)
    success_on_equal: bool = False

    @field_validator("beta")
    @classmethod
    def _beta_finite(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError(f"beta must be finite, got {value}")
        return value

    @field_validator("cap")
    @classmethod
    def _cap_at_least_one(cls, value: CapPolicy) -> CapPolicy:
        if isinstance(value, float) and not value >= 1.0:
            raise ValueError(f"cap must be at least 1, got {value}")
        return value

    def resolve_u(self, n: int) -> int:
        """Upper limit of the lambda distribution for problem size n."""
        if self.u == "n":
            return n
        if self.u == "2ln":
            return max(1, math.floor(log_cap(n)))
        return int(self.u)

    def resolve_cap(self, n: int) -> float | None:
        """Cap of the one-fifth rule for problem size n, None when uncapped."""
        if self.cap == "none":
            return None
        if self.cap == "2ln":
            return log_cap(n)
        return float(self.cap)

    def label(self) -> str:
        """Identifier used in CSV files and for seed derivation.

        Carries every parameter that changes the behaviour of the named
        algorithm, so distinct settings never share seeds or summary rows.
        """
        if self.name == "ollga-fast":
            return f"{self.name}[beta={self.beta:g} u={self.u}]"
        if self.name == "ollga-onefifth":
            extra = "" if self.update_factor == 1.5 else f" F={self.update_factor:g}"
            if self.success_on_equal:
                extra += " success=ge"
            return f"{self.name}[cap={self.cap}{extra}]"
        if self.name == "ollga-static":
            value = "opt" if self.lambda_value is None else f"{self.lambda_value:g}"
            return f"{self.name}[lambda={value}]"
        return self.name


class ExperimentConfig(BaseModel):
    """A batch of independent runs of one algorithm on one problem.

    Attributes:
        algorithm: Algorithm and its parameters.
        problem: 'onemax' or 'maxsat'; maxsat draws a new instance per run.
        sizes: Problem sizes, conventionally powers of two.
        runs: Independent runs per size.
        base_seed: 64-bit seed all per-run seeds are derived from.
        max_evaluations: Evaluation limit per run. None means 10^4 n, and
            'unlimited' disables the limit.
        out: Output directory, if results are to be written.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    algorithm: AlgorithmSpec
    problem: ProblemName = "onemax"
    sizes: list[PositiveInt] = Field(min_length=1)
    runs: PositiveInt = 100
    base_seed: int = Field(default=0, ge=0, le=MAX_SEED)
    max_evaluations: PositiveInt | Literal["unlimited"] | None = None
    out: Path | None = None

    @model_validator(mode="after")
    def _check_sizes(self) -> Self:
        for n in self.sizes:
            if self.problem == "maxsat" and n < 3:
                raise ValueError(f"maxsat needs n >= 3, got {n}")
            if self.algorithm.name == "ollga-fast":
                u = self.algorithm.resolve_u(n)
                if not 1 <= u <= n:
                    raise ValueError(f"u={u} is outside [1..{n}] for n={n}")
            if self.algorithm.name == "ollga-static":
                lam = self.algorithm.lambda_value
                if lam is not None and lam > n:
                    raise ValueError(f"lambda={lam} exceeds n={n}")
        if self.algorithm.name == "ollga-fitdep" and self.problem != "onemax":
            raise ValueError(
                "ollga-fitdep needs fitness values in [0..n) and only supports "
                f"onemax, got problem={self.problem}"
            )
        return self

    def budget_for(self, n: int) -> int | None:
        """Evaluation limit of a run at size n."""
        if self.max_evaluations == "unlimited":
            return None
        if self.max_evaluations is None:
            return DEFAULT_BUDGET_FACTOR * n
        return self.max_evaluations


class SweepConfig(BaseModel):
    """A list of experiments sharing an output directory and worker pool.

    Attributes:
        out: Output directory.
        workers: Worker processes.
        record_wall_time: Write measured wall times; when False every wall_ms
            is 0 and the per-run CSV is reproducible byte for byte.
        experiments: Experiments to run, in order.
    """

    model_config = ConfigDict(extra="forbid")

    out: Path | None = None
    workers: PositiveInt = 1
    record_wall_time: bool = True
    experiments: list[ExperimentConfig] = Field(min_length=1)

    @model_validator(mode="after")
    def _check_unique(self) -> Self:
        seen: set[tuple[str, str, int]] = set()
        for experiment in self.experiments:
            label = experiment.algorithm.label()
            for n in experiment.sizes:
                key = (label, experiment.problem, n)
                if key in seen:
                    raise ValueError(
                        f"duplicate experiment {label} on {experiment.problem} "
                        f"with n={n}"
                    )
                seen.add(key)
        return self

    @classmethod
    def from_file(cls, path: Path) -> Self:
        """Load and validate a JSON sweep file.

        Raises:
            ConfigError: If the file is not valid JSON or fails validation.
            OSError: If the file cannot be read.
        """
        text = path.read_text(encoding="utf-8")
        try:
            return cls.model_validate(json.loads(text))
        except json.JSONDecodeError as e:
            raise ConfigError(f"{path}: invalid JSON: {e}") from e
        except ValidationError as e:
            raise ConfigError(f"{path}: {e}") from e


def validate_experiment(data: dict[str, object]) -> ExperimentConfig:
    """Build an ExperimentConfig, reporting failures as ConfigError."""
    try:
        return ExperimentConfig.model_validate(data)
    except ValidationError as e:
        raise ConfigError(str(e)) from e
