"""
Use case for writing a simulated scenario to disk
"""
from typing import Tuple

from src.domain.entities.dataset import Dataset, Scenario
from src.domain.services.simulation import generate
from src.application.use_cases.signal_io import save_signal, suffixed


class SimulateScenarioUseCase:
    """
    Use case for writing simulated data and its true signal
    """

    def __init__(self, exporter_registry):
        self.exporter_registry = exporter_registry

    def execute(self, scenario_id: int, n: int, seed: int, output_path: str) -> Tuple[Dataset, str, str]:
        """
        Generate a dataset and write y and theta_star next to each other

        Returns:
            The dataset and the paths written (<stem>_y, <stem>_theta)
        """
        dataset = generate(Scenario(scenario_id, n), seed)
        y_path = save_signal(self.exporter_registry, dataset.y, suffixed(output_path, "_y"))
        theta_path = save_signal(self.exporter_registry, dataset.theta_star, suffixed(output_path, "_theta"))
        return dataset, y_path, theta_path
