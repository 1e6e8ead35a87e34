"""
Value objects configuring a single fit
"""
from dataclasses import dataclass, field, replace
from enum import Enum

from src.domain.exceptions import ConfigurationError, UsageError
from src.domain.value_objects.quantile_level import QuantileLevel, as_level


class FitMethod(Enum):
    """Estimators provided by the solver"""
    QDCART = "qdcart"
    DCART = "dcart"
    QORT1D = "qort1d"

    @classmethod
    def parse(cls, name) -> "FitMethod":
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).strip().lower())
        except ValueError:
            known = ", ".join(method.value for method in cls)
            raise UsageError(f"unknown method '{name}' (expected one of: {known})") from None

    @property
    def is_quantile(self) -> bool:
        return self is not FitMethod.DCART


@dataclass(frozen=True)
class SolverConfig:
    """
    Tuning of one fit: quantile level, penalty per piece and minimum piece size

    ``retain_segments`` keeps every sorted segment alive for the whole
    fit instead of releasing it once all its parents are merged; it is a
    debugging aid and costs O(N (log n)^d) memory.
    """
    tau: QuantileLevel = field(default_factory=QuantileLevel)
    lam: float = 1.0
    gamma: int = 1
    method: FitMethod = FitMethod.QDCART
    retain_segments: bool = False

    def __post_init__(self):
        object.__setattr__(self, "tau", as_level(self.tau))
        object.__setattr__(self, "method", FitMethod.parse(self.method))
        lam = float(self.lam)
        if not lam > 0.0 or lam == float("inf"):
            raise ConfigurationError(f"lambda must be a positive finite number, got {self.lam}")
        object.__setattr__(self, "lam", lam)
        if int(self.gamma) != self.gamma or self.gamma < 1:
            raise ConfigurationError(f"gamma must be a positive integer, got {self.gamma}")
        object.__setattr__(self, "gamma", int(self.gamma))

    def with_lambda(self, lam: float) -> "SolverConfig":
        return replace(self, lam=lam)
