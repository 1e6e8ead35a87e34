"""
FitResult entity: the fitted surface of one solver run
"""
from dataclasses import dataclass

import numpy as np

from src.domain.entities.partition import Partition
from src.domain.value_objects.solver_config import FitMethod, SolverConfig


@dataclass(frozen=True, eq=False)
class FitResult:
    """
    Fitted array, the partition it is constant on, and the optimal objective

    ``objective`` is the penalized loss: sum of check losses (squared
    errors for dcart) plus lambda times the number of leaves.
    """
    theta_hat: np.ndarray
    partition: Partition
    objective: float
    config: SolverConfig

    @property
    def leaf_count(self) -> int:
        return len(self.partition)

    @property
    def lam(self) -> float:
        return self.config.lam

    @property
    def gamma(self) -> int:
        return self.config.gamma

    @property
    def tau(self) -> float:
        return self.config.tau.tau

    @property
    def method(self) -> FitMethod:
        return self.config.method

    @property
    def loss(self) -> float:
        """Objective without the penalty term"""
        return self.objective - self.config.lam * self.leaf_count
