"""
Value objects describing a Monte-Carlo benchmark and its output rows
"""
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from src.domain.entities.dataset import Scenario
from src.domain.exceptions import ConfigurationError, UsageError
from src.domain.value_objects.lambda_grid import LambdaGrid
from src.domain.value_objects.quantile_level import QuantileLevel, as_level
from src.domain.value_objects.solver_config import FitMethod

BENCH_HEADER = ("scenario", "n", "method", "mse_mean", "mse_stderr", "lambda_star", "wall_time_seconds")
SURFACE_HEADER = ("scenario", "n", "method", "lambda", "mse_mean", "mse_stderr")


def _int_list(value) -> Tuple[int, ...]:
    if isinstance(value, str):
        value = [part for part in value.split(",") if part.strip()]
    elif isinstance(value, int):
        value = [value]
    try:
        return tuple(int(str(v).strip()) for v in value)
    except ValueError:
        raise ConfigurationError(f"expected a comma-separated list of integers, got {value!r}") from None


@dataclass(frozen=True)
class BenchSpec:
    """
    Scenarios x sizes x methods to benchmark under the oracle-MSE protocol

    ``grid`` and ``gamma`` left as None take the per-dimension defaults
    (grid_1d and gamma 8 in 1-d, grid_2d and ceil(log2 N) in 2-d).
    """
    scenarios: Tuple[int, ...] = (1,)
    sizes: Tuple[int, ...] = (512,)
    methods: Tuple[FitMethod, ...] = (FitMethod.QDCART, FitMethod.DCART)
    replicates: int = 100
    grid: Optional[LambdaGrid] = None
    gamma: Optional[int] = None
    tau: QuantileLevel = field(default_factory=QuantileLevel)
    base_seed: int = 0
    full: bool = False

    def __post_init__(self):
        object.__setattr__(self, "tau", as_level(self.tau))
        object.__setattr__(self, "methods", tuple(FitMethod.parse(m) for m in self.methods))
        if self.replicates < 1:
            raise ConfigurationError(f"replicates must be >= 1, got {self.replicates}")
        if not self.methods:
            raise ConfigurationError("at least one method is required")
        if not self.scenarios or not self.sizes:
            raise ConfigurationError("at least one scenario and one size are required")
        if self.gamma is not None and self.gamma < 1:
            raise ConfigurationError(f"gamma must be >= 1, got {self.gamma}")
        if self.base_seed < 0:
            raise ConfigurationError(f"base seed must be nonnegative, got {self.base_seed}")
        for scenario in self.cases():
            if FitMethod.QORT1D in self.methods and scenario.d != 1:
                raise UsageError(f"qort1d cannot run on 2-d scenario {scenario.id}")

    def cases(self) -> Tuple[Scenario, ...]:
        """Every (scenario, n) combination, validated"""
        return tuple(Scenario(s, n) for s in self.scenarios for n in self.sizes)

    @classmethod
    def from_options(cls, options: Dict[str, Any]) -> "BenchSpec":
        """Build from a flat key=value option mapping (config file merged with flags)"""
        kwargs: Dict[str, Any] = {}
        if options.get("scenarios") is not None:
            kwargs["scenarios"] = _int_list(options["scenarios"])
        if options.get("sizes") is not None:
            kwargs["sizes"] = _int_list(options["sizes"])
        if options.get("methods") is not None:
            methods = options["methods"]
            if isinstance(methods, str):
                methods = [m for m in methods.split(",") if m.strip()]
            kwargs["methods"] = tuple(FitMethod.parse(m) for m in methods)
        for key in ("replicates", "gamma", "base_seed"):
            if options.get(key) is not None:
                try:
                    kwargs[key] = int(options[key])
                except (TypeError, ValueError):
                    raise ConfigurationError(f"{key} must be an integer, got {options[key]!r}") from None
        if options.get("tau") is not None:
            try:
                kwargs["tau"] = QuantileLevel(float(options["tau"]))
            except (TypeError, ValueError) as error:
                raise ConfigurationError(f"invalid tau {options['tau']!r}: {error}") from None
        if options.get("grid") is not None:
            kwargs["grid"] = options["grid"]
        if options.get("full") is not None:
            full = options["full"]
            kwargs["full"] = full if isinstance(full, bool) else str(full).strip().lower() in ("1", "true", "yes")
        return cls(**kwargs)


@dataclass(frozen=True)
class BenchRow:
    """Oracle-MSE summary of one (scenario, n, method)"""
    scenario: int
    n: int
    method: FitMethod
    mse_mean: float
    mse_stderr: float
    lambda_star: float
    wall_time_seconds: float

    def as_record(self) -> Tuple:
        return (self.scenario, self.n, self.method.value, self.mse_mean, self.mse_stderr,
                self.lambda_star, self.wall_time_seconds)


@dataclass(frozen=True)
class SurfacePoint:
    """Monte-Carlo mean MSE at one lambda of the grid"""
    scenario: int
    n: int
    method: FitMethod
    lam: float
    mse_mean: float
    mse_stderr: float

    def as_record(self) -> Tuple:
        return (self.scenario, self.n, self.method.value, self.lam, self.mse_mean, self.mse_stderr)
