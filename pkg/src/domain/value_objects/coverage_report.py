"""
Value object for held-out quantile calibration
"""
from dataclasses import dataclass


@dataclass(frozen=True)
class CoverageReport:
    """
    prop_median: share of test samples strictly below their predicted median
    coverage_80: share of test samples between their predicted 0.1 and 0.9 quantiles
    """
    prop_median: float
    coverage_80: float
    repetitions: int
