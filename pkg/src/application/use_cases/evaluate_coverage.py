"""
Use case for held-out quantile calibration of a 1-d signal file
"""
from typing import Optional

from src.domain.entities.rect import LatticeShape
from src.domain.services.holdout import holdout_coverage
from src.domain.services.tuning import grid_bic_1d
from src.domain.value_objects.coverage_report import CoverageReport
from src.domain.value_objects.lambda_grid import LambdaGrid
from src.domain.value_objects.solver_config import FitMethod
from src.application.use_cases.signal_io import load_signal
from src.infrastructure.utils.logging import quiet_fits


class EvaluateCoverageUseCase:
    """
    Use case for held-out coverage of quantile fits
    """

    def __init__(self, importer_registry):
        self.importer_registry = importer_registry

    def execute(
        self,
        input_path: str,
        gamma: int = 8,
        grid: Optional[LambdaGrid] = None,
        repetitions: int = 100,
        seed: int = 0,
        method: FitMethod = FitMethod.QDCART,
        shape: Optional[LatticeShape] = None,
    ) -> CoverageReport:
        y = load_signal(self.importer_registry, input_path, shape)
        with quiet_fits():
            return holdout_coverage(y, gamma, grid or grid_bic_1d(), repetitions, seed, method)
