"""
Use case for BIC tuning of lambda on a signal file
"""
from dataclasses import dataclass
from typing import List, Optional

from src.domain.entities.fit_result import FitResult
from src.domain.entities.rect import LatticeShape
from src.domain.services.tuning import default_df_mode, default_gamma, default_grid, select_lambda, sigma
from src.domain.value_objects.lambda_grid import BicScore, DfMode, LambdaGrid
from src.domain.value_objects.solver_config import FitMethod, SolverConfig
from src.application.use_cases.signal_io import load_signal, save_signal


@dataclass
class TuneOutcome:
    """Selected penalty, its fit and the full BIC table"""
    lam: float
    fit: FitResult
    scores: List[BicScore]
    sigma: float


class TuneLambdaUseCase:
    """
    Use case for selecting lambda by the quantile BIC
    """

    def __init__(self, importer_registry, exporter_registry):
        self.importer_registry = importer_registry
        self.exporter_registry = exporter_registry

    def execute(
        self,
        input_path: str,
        output_path: str,
        grid: Optional[LambdaGrid] = None,
        tau: float = 0.5,
        gamma: Optional[int] = None,
        df_mode: Optional[DfMode] = None,
        method: FitMethod = FitMethod.QDCART,
        shape: Optional[LatticeShape] = None,
    ) -> TuneOutcome:
        y = load_signal(self.importer_registry, input_path, shape)
        lattice = LatticeShape(y.shape)
        grid = grid or default_grid(lattice.d)
        gamma = gamma if gamma is not None else default_gamma(lattice)
        cfg = SolverConfig(tau=tau, lam=grid.values[0], gamma=gamma, method=method)
        lam, result, scores = select_lambda(y, cfg, grid, df_mode or default_df_mode(lattice.d))
        save_signal(self.exporter_registry, result.theta_hat, output_path)
        return TuneOutcome(lam=lam, fit=result, scores=scores, sigma=sigma(cfg.tau))
