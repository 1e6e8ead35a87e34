"""
Value objects for the sorted observations of one rectangle and its fitted cost
"""
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from src.domain.exceptions import UsageError


@dataclass(frozen=True, eq=False)
class SortedSegment:
    """
    Observation values of one rectangle in nondecreasing order

    ``prefix`` has one more entry than ``values``: prefix[0] = 0 and
    prefix[k] is the sum of the k smallest values.
    """
    values: np.ndarray

    @classmethod
    def from_values(cls, values) -> "SortedSegment":
        array = np.sort(np.asarray(values, dtype=np.float64).ravel(), kind="stable")
        if array.size == 0:
            raise UsageError("a segment needs at least one value")
        return cls(array)

    @cached_property
    def prefix(self) -> np.ndarray:
        prefix = np.empty(self.values.size + 1, dtype=np.float64)
        prefix[0] = 0.0
        np.cumsum(self.values, out=prefix[1:])
        return prefix

    def __len__(self) -> int:
        return int(self.values.size)


@dataclass(frozen=True)
class RectCost:
    """Sum of quantile loss of a rectangle about its fitted constant"""
    sql: float
    quantile: float
