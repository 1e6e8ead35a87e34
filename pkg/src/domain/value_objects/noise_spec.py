"""
Value object describing the noise law of a simulated dataset
"""
from dataclasses import dataclass
from enum import Enum
from typing import Tuple


class NoiseLaw(Enum):
    """Noise distributions used by the simulation scenarios"""
    STUDENT_T = "student-t"
    CAUCHY = "cauchy"
    HETEROSCEDASTIC_NORMAL = "heteroscedastic-normal"


@dataclass(frozen=True)
class NoiseSpec:
    """
    Noise law plus seed

    ``stream`` is appended to the seed's spawn key so that different
    scenarios and sizes draw from independent streams under one seed.
    """
    law: NoiseLaw
    seed: int = 0
    df: float = 2.5
    stream: Tuple[int, ...] = ()
