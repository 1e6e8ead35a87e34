"""
Value object for the quantile level tau
"""
import math
from dataclasses import dataclass

from src.domain.exceptions import ConfigurationError


@dataclass(frozen=True)
class QuantileLevel:
    """Quantile level strictly inside (0, 1)"""
    tau: float = 0.5

    def __post_init__(self):
        tau = float(self.tau)
        if not 0.0 < tau < 1.0:
            raise ConfigurationError(f"tau must lie in the open interval (0, 1), got {self.tau}")
        object.__setattr__(self, "tau", tau)

    @property
    def sigma(self) -> float:
        """Scale used by the quantile BIC: (1 - |1 - 2 tau|) / 2"""
        return (1.0 - abs(1.0 - 2.0 * self.tau)) / 2.0

    def rank(self, m: int) -> int:
        """
        1-based rank k of the left-endpoint empirical quantile of m values

        k = tau*m when tau*m is an integer, ceil(tau*m) otherwise. The
        product is snapped to the nearest integer within 1e-9 so that e.g.
        0.7 * 10 counts as the integer 7.
        """
        product = self.tau * m
        nearest = round(product)
        if abs(product - nearest) <= 1e-9 * max(1.0, product):
            k = int(nearest)
        else:
            k = math.ceil(product)
        return min(max(k, 1), m)

    def __float__(self) -> float:
        return self.tau

    def __str__(self) -> str:
        return f"{self.tau:g}"


def as_level(tau) -> QuantileLevel:
    """Accept a QuantileLevel or a bare float"""
    return tau if isinstance(tau, QuantileLevel) else QuantileLevel(tau)
