"""
Use case for denoising a signal file with a fixed or BIC-selected lambda
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from src.domain.entities.fit_result import FitResult
from src.domain.entities.rect import LatticeShape
from src.domain.services.dp_solver import fit
from src.domain.services.tuning import default_df_mode, default_gamma, default_grid, select_lambda
from src.domain.value_objects.lambda_grid import BicScore, DfMode, LambdaGrid
from src.domain.value_objects.solver_config import FitMethod, SolverConfig
from src.application.use_cases.signal_io import load_signal, save_signal, suffixed

logger = logging.getLogger('qdcart')


@dataclass
class DenoiseOutcome:
    """Result of denoising at one quantile level"""
    fit: FitResult
    output_path: str
    selected_lambda: Optional[float] = None
    scores: List[BicScore] = field(default_factory=list)


class DenoiseSignalUseCase:
    """
    Use case for denoising a signal file
    """

    def __init__(self, importer_registry, exporter_registry):
        self.importer_registry = importer_registry
        self.exporter_registry = exporter_registry

    def execute(
        self,
        input_path: str,
        output_path: str,
        taus: Sequence[float] = (0.5,),
        lam: Optional[float] = None,
        gamma: Optional[int] = None,
        method: FitMethod = FitMethod.QDCART,
        shape: Optional[LatticeShape] = None,
        grid: Optional[LambdaGrid] = None,
        df_mode: Optional[DfMode] = None,
    ) -> List[DenoiseOutcome]:
        """
        Fit the signal at every requested quantile level and write the fits

        Args:
            input_path: Signal file (CSV or NPY)
            output_path: Destination; suffixed with _tau<level> when several levels are given
            taus: Quantile levels
            lam: Fixed penalty; None selects lambda by BIC over ``grid``
            gamma: Minimum leaf size; None takes the per-dimension default
            method: Estimator
            shape: Lattice to reshape the input onto
            grid: Candidate penalties for BIC selection
            df_mode: Degrees-of-freedom estimate for BIC selection; jump count in 1-d, leaf count otherwise

        Returns:
            One outcome per quantile level
        """
        y = load_signal(self.importer_registry, input_path, shape)
        lattice = LatticeShape(y.shape)
        gamma = gamma if gamma is not None else default_gamma(lattice)
        outcomes = []
        for tau in taus:
            cfg = SolverConfig(tau=tau, lam=lam if lam is not None else 1.0, gamma=gamma, method=method)
            target = output_path if len(taus) == 1 else suffixed(output_path, f"_tau{cfg.tau}")
            if lam is None:
                candidates = grid or default_grid(lattice.d)
                selected, result, scores = select_lambda(y, cfg, candidates, df_mode or default_df_mode(lattice.d))
                outcome = DenoiseOutcome(fit=result, output_path=target, selected_lambda=selected, scores=scores)
            else:
                outcome = DenoiseOutcome(fit=fit(y, cfg), output_path=target)
            save_signal(self.exporter_registry, outcome.fit.theta_hat, target)
            logger.info(f"Wrote {method.value} fit at tau={cfg.tau} ({outcome.fit.leaf_count} leaves) to {target}")
            outcomes.append(outcome)
        return outcomes
