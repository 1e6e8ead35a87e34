"""
Held-out calibration of quantile fits on a 1-d signal

Half of the coordinates are drawn at random for training; the training
subsequence is fitted at tau = 0.1, 0.5 and 0.9 with BIC-selected lambda,
and each test coordinate is predicted from its closest training coordinate.
"""
import logging
from dataclasses import replace

import numpy as np

from src.domain.exceptions import InfeasibleConfigurationError, UsageError
from src.domain.services.tuning import select_lambda
from src.domain.value_objects.coverage_report import CoverageReport
from src.domain.value_objects.lambda_grid import DfMode, LambdaGrid
from src.domain.value_objects.quantile_level import QuantileLevel
from src.domain.value_objects.solver_config import FitMethod, SolverConfig

logger = logging.getLogger('qdcart')

LEVELS = (0.1, 0.5, 0.9)


def nearest_training(train: np.ndarray, test: np.ndarray) -> np.ndarray:
    """
    Position in ``train`` (sorted coordinates) closest to each test coordinate;
    ties go to the smaller coordinate
    """
    right = np.searchsorted(train, test)
    left = np.clip(right - 1, 0, train.size - 1)
    right = np.clip(right, 0, train.size - 1)
    take_right = np.abs(train[right] - test) < np.abs(test - train[left])
    return np.where(take_right, right, left)


def holdout_coverage(y, gamma: int, grid: LambdaGrid, repetitions: int = 100, seed: int = 0,
                     method=FitMethod.QDCART) -> CoverageReport:
    values = np.asarray(y, dtype=np.float64)
    if values.ndim != 1:
        raise UsageError(f"held-out coverage needs a 1-d signal, got d = {values.ndim}")
    if repetitions < 1:
        raise UsageError(f"repetitions must be >= 1, got {repetitions}")
    n = values.size
    n_train = n // 2
    if n_train < 1 or gamma > n_train:
        raise InfeasibleConfigurationError(f"gamma = {gamma} exceeds the training size {n_train}")

    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))
    base = SolverConfig(gamma=gamma, method=method, lam=grid.values[0])
    below_median = []
    inside_band = []
    for repetition in range(repetitions):
        chosen = np.zeros(n, dtype=bool)
        chosen[rng.choice(n, size=n_train, replace=False)] = True
        train = np.flatnonzero(chosen)
        test = np.flatnonzero(~chosen)
        nearest = nearest_training(train, test)
        predictions = {}
        for tau in LEVELS:
            cfg = replace(base, tau=QuantileLevel(tau))
            _, fit, _ = select_lambda(values[train], cfg, grid, DfMode.JUMP_COUNT)
            predictions[tau] = fit.theta_hat[nearest]
        observed = values[test]
        below_median.append(np.mean(observed < predictions[0.5]))
        inside_band.append(np.mean((observed >= predictions[0.1]) & (observed <= predictions[0.9])))
        logger.debug(f"Holdout repetition {repetition + 1}/{repetitions}: "
                     f"prop={below_median[-1]:.3f} cov={inside_band[-1]:.3f}")
    return CoverageReport(
        prop_median=float(np.mean(below_median)),
        coverage_80=float(np.mean(inside_band)),
        repetitions=repetitions,
    )
