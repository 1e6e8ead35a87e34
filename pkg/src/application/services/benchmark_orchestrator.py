"""
Service for orchestrating Monte-Carlo benchmark runs
"""
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

import numpy as np

from src.domain.entities.dataset import Scenario
from src.domain.entities.rect import LatticeShape
from src.domain.services.dp_solver import fit_path
from src.domain.services.simulation import generate
from src.domain.services.tuning import default_gamma, default_grid
from src.domain.value_objects.bench_spec import BenchRow, BenchSpec, SurfacePoint
from src.domain.value_objects.quantile_level import QuantileLevel
from src.domain.value_objects.solver_config import FitMethod, SolverConfig
from src.infrastructure.utils.logging import detail_level, quiet_fits

logger = logging.getLogger('qdcart')

THREADS_VARIABLE = "QDCART_THREADS"


def worker_count() -> int:
    """Pool size: QDCART_THREADS when set to a positive integer, else the CPU count"""
    cap = os.environ.get(THREADS_VARIABLE, "").strip()
    if cap:
        try:
            value = int(cap)
            if value >= 1:
                return value
        except ValueError:
            pass
        logger.warning(f"Ignoring invalid {THREADS_VARIABLE}={cap!r}")
    return os.cpu_count() or 1


@dataclass(frozen=True)
class ReplicateTask:
    """One simulated dataset fitted along the whole lambda grid"""
    scenario: Scenario
    method: FitMethod
    lambdas: Tuple[float, ...]
    gamma: int
    tau: QuantileLevel
    seed: int


def _init_worker(parent_level: int):
    logger.setLevel(detail_level(parent_level))


def replicate_mse(task: ReplicateTask) -> np.ndarray:
    """Mean squared error against theta_star for every lambda of the task"""
    dataset = generate(task.scenario, task.seed)
    cfg = SolverConfig(tau=task.tau, lam=task.lambdas[0], gamma=task.gamma, method=task.method)
    fits = fit_path(dataset.y, cfg, task.lambdas)
    return np.array([np.mean(np.square(dataset.theta_star - fit.theta_hat)) for fit in fits])


class BenchmarkOrchestrator:
    """
    Service fanning replicates out over a worker pool and reducing them in
    replicate order, so results do not depend on the number of workers
    """

    def __init__(self, max_workers: Optional[int] = None):
        self.max_workers = max_workers
        self.progress_callback = None

    def set_progress_callback(self, callback: Callable[[int, str], None]):
        """
        Set a callback function to report progress

        Args:
            callback: Function that takes a percentage (0-100) and a message
        """
        self.progress_callback = callback

    def _report_progress(self, percentage: int, message: str):
        if self.progress_callback:
            self.progress_callback(percentage, message)

    def _map(self, tasks: List[ReplicateTask]) -> List[np.ndarray]:
        workers = self.max_workers or worker_count()
        if workers <= 1 or len(tasks) <= 1:
            with quiet_fits():
                return [replicate_mse(task) for task in tasks]
        with ProcessPoolExecutor(max_workers=min(workers, len(tasks)), initializer=_init_worker,
                                 initargs=(logger.getEffectiveLevel(),)) as pool:
            return list(pool.map(replicate_mse, tasks))

    def run(self, spec: BenchSpec) -> Tuple[List[BenchRow], List[SurfacePoint]]:
        """
        Oracle-MSE protocol: average the MSE over replicates at every lambda
        and report the grid minimizer

        Returns:
            One row per (scenario, n, method) and the full per-lambda surface
        """
        rows: List[BenchRow] = []
        surface: List[SurfacePoint] = []
        combinations = [(scenario, method) for scenario in spec.cases() for method in spec.methods]
        for position, (scenario, method) in enumerate(combinations):
            grid = spec.grid or default_grid(scenario.d)
            gamma = spec.gamma or default_gamma(LatticeShape(scenario.dims))
            self._report_progress(
                int(100 * position / len(combinations)),
                f"Scenario {scenario.id}, n={scenario.n}, {method.value}: {spec.replicates} replicates",
            )
            tasks = [
                ReplicateTask(scenario, method, grid.values, gamma, spec.tau, spec.base_seed + replicate)
                for replicate in range(spec.replicates)
            ]
            started = time.perf_counter()
            errors = np.vstack(self._map(tasks))
            elapsed = time.perf_counter() - started

            means = errors.mean(axis=0)
            if spec.replicates > 1:
                stderrs = errors.std(axis=0, ddof=1) / np.sqrt(spec.replicates)
            else:
                stderrs = np.zeros_like(means)
            best = int(np.argmin(means))
            row = BenchRow(
                scenario=scenario.id,
                n=scenario.n,
                method=method,
                mse_mean=float(means[best]),
                mse_stderr=float(stderrs[best]),
                lambda_star=grid.values[best],
                wall_time_seconds=elapsed,
            )
            rows.append(row)
            surface.extend(
                SurfacePoint(scenario.id, scenario.n, method, lam, float(mean), float(stderr))
                for lam, mean, stderr in zip(grid.values, means, stderrs)
            )
            logger.info(f"Scenario {scenario.id} n={scenario.n} {method.value}: mse={row.mse_mean:.4g} "
                        f"(se {row.mse_stderr:.2g}) at lambda={row.lambda_star:g} in {elapsed:.1f}s")
        self._report_progress(100, "Benchmark completed")
        return rows, surface
