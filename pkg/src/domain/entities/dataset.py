"""
Scenario and Dataset entities for simulated signals
"""
from dataclasses import dataclass

import numpy as np

from src.domain.exceptions import ConfigurationError
from src.domain.value_objects.noise_spec import NoiseLaw

SCENARIO_NOISE = {
    1: NoiseLaw.STUDENT_T,
    2: NoiseLaw.STUDENT_T,
    3: NoiseLaw.CAUCHY,
    4: NoiseLaw.HETEROSCEDASTIC_NORMAL,
    5: NoiseLaw.STUDENT_T,
    6: NoiseLaw.STUDENT_T,
    7: NoiseLaw.STUDENT_T,
}


@dataclass(frozen=True)
class Scenario:
    """
    Simulation scenario: ids 1-4 are 1-d signals of length n, ids 5-7
    are n x n images
    """
    id: int
    n: int

    def __post_init__(self):
        if self.id not in SCENARIO_NOISE:
            raise ConfigurationError(f"scenario must be one of 1..7, got {self.id}")
        minimum = 32 if self.id in (2, 4) else 5
        if self.n < minimum:
            raise ConfigurationError(f"scenario {self.id} needs n >= {minimum}, got n = {self.n}")

    @property
    def d(self) -> int:
        return 1 if self.id <= 4 else 2

    @property
    def dims(self):
        return (self.n,) * self.d

    @property
    def noise_law(self) -> NoiseLaw:
        return SCENARIO_NOISE[self.id]


@dataclass(frozen=True, eq=False)
class Dataset:
    """Observed y = theta_star + noise for one scenario and seed"""
    y: np.ndarray
    theta_star: np.ndarray
    scenario: Scenario
    seed: int

    @property
    def noise(self) -> np.ndarray:
        return self.y - self.theta_star
