"""
Penalty grids and quantile-BIC selection of lambda
"""
import logging
import math
from typing import List, Tuple

import numpy as np

from src.domain.entities.fit_result import FitResult
from src.domain.entities.rect import LatticeShape
from src.domain.exceptions import ConfigurationError, UsageError
from src.domain.services.dp_solver import fit_path
from src.domain.services.quantile_core import check_loss
from src.domain.value_objects.lambda_grid import BicScore, DfMode, GridProvenance, LambdaGrid
from src.domain.value_objects.quantile_level import as_level
from src.domain.value_objects.solver_config import SolverConfig

logger = logging.getLogger('qdcart')

JUMP_THRESHOLD = 1e-3


def grid_1d() -> LambdaGrid:
    """{2^-2, 2^-1.75, ..., 2^4}: 25 values"""
    return LambdaGrid(tuple(2.0 ** (-2.0 + 0.25 * j) for j in range(25)), GridProvenance.GRID_1D)


def grid_2d() -> LambdaGrid:
    """log10(lambda) in {-1 + 6.5 j / 59 : j = 0..59}: 60 values"""
    return LambdaGrid(tuple(10.0 ** (-1.0 + 6.5 * j / 59) for j in range(60)), GridProvenance.GRID_2D)


def grid_qtvd_style() -> LambdaGrid:
    """log2(lambda) in {-1 + 7 j / 19 : j = 0..19}: 20 values"""
    return LambdaGrid(tuple(2.0 ** (-1.0 + 7.0 * j / 19) for j in range(20)), GridProvenance.QTVD_STYLE)


def grid_bic_1d() -> LambdaGrid:
    """log2(lambda) in {-2 + 7 j / 25 : j = 0..25}: 26 values, for BIC tuning of 1-d signals"""
    return LambdaGrid(tuple(2.0 ** (-2.0 + 7.0 * j / 25) for j in range(26)), GridProvenance.BIC_1D)


def default_grid(d: int) -> LambdaGrid:
    return grid_1d() if d == 1 else grid_2d()


def default_df_mode(d: int) -> DfMode:
    """Jump count for 1-d signals, leaf count otherwise"""
    return DfMode.JUMP_COUNT if d == 1 else DfMode.LEAF_COUNT


def default_gamma(shape: LatticeShape) -> int:
    """8 in 1-d, ceil(log2 N) otherwise (never below 1)"""
    if shape.d == 1:
        return min(8, shape.N)
    return max(1, math.ceil(math.log2(shape.N)))


def sigma(tau) -> float:
    """(1 - |1 - 2 tau|) / 2"""
    value = as_level(tau).sigma
    if value <= 0.0:
        raise ConfigurationError(f"BIC scale sigma vanishes at tau = {tau}")
    return value


def degrees_of_freedom(fit: FitResult, df_mode) -> int:
    mode = DfMode.parse(df_mode)
    if mode is DfMode.LEAF_COUNT:
        return fit.leaf_count
    theta = np.asarray(fit.theta_hat)
    if theta.ndim != 1:
        raise UsageError(f"jump-count degrees of freedom need a 1-d fit, got d = {theta.ndim}")
    return int(np.count_nonzero(np.abs(np.diff(theta)) > JUMP_THRESHOLD))


def bic(y, fit: FitResult, df_mode=DfMode.JUMP_COUNT) -> BicScore:
    """Quantile BIC (2 / sigma) * sum rho_tau(y - theta_hat) + v * log N"""
    values = np.asarray(y, dtype=np.float64)
    if values.shape != np.shape(fit.theta_hat):
        raise UsageError(f"data shape {values.shape} does not match fit shape {np.shape(fit.theta_hat)}")
    scale = sigma(fit.config.tau)
    loss = check_loss(values, fit.theta_hat, fit.config.tau)
    v = degrees_of_freedom(fit, df_mode)
    score = (2.0 / scale) * loss + v * math.log(values.size)
    return BicScore(lam=fit.lam, bic=score, v=v, loss=loss)


def select_lambda(y, cfg: SolverConfig, grid: LambdaGrid,
                  df_mode=DfMode.JUMP_COUNT) -> Tuple[float, FitResult, List[BicScore]]:
    """
    Fit every grid value and return the BIC minimizer

    Ties go to the larger lambda. cfg.lam is ignored.
    """
    if len(grid) == 0:
        raise UsageError("cannot select lambda from an empty grid")
    mode = DfMode.parse(df_mode)
    fits = fit_path(y, cfg, grid.values)
    scores = [bic(y, fit, mode) for fit in fits]
    chosen = 0
    for position, score in enumerate(scores):
        if score.bic <= scores[chosen].bic:
            chosen = position
    logger.info(f"BIC selected lambda={grid.values[chosen]:g} ({fits[chosen].leaf_count} leaves, "
                f"v={scores[chosen].v}) from {len(grid)} candidates")
    return grid.values[chosen], fits[chosen], scores


NAMED_GRIDS = {
    "1d": grid_1d,
    "2d": grid_2d,
    "qtvd": grid_qtvd_style,
    "bic1d": grid_bic_1d,
}


def grid_by_name(name: str, values=None) -> LambdaGrid:
    """Resolve 1d | 2d | qtvd | bic1d, or custom with explicit values"""
    key = str(name).strip().lower()
    if key == "custom":
        if not values:
            raise UsageError("a custom grid needs at least one lambda value")
        return LambdaGrid.custom(values)
    if key not in NAMED_GRIDS:
        known = ", ".join(list(NAMED_GRIDS) + ["custom"])
        raise UsageError(f"unknown grid '{name}' (expected one of: {known})")
    return NAMED_GRIDS[key]()
