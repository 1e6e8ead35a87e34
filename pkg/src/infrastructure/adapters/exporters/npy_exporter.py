"""
Exporter for numpy .npy signals
"""
import logging

import numpy as np

from src.infrastructure.adapters.exporters.exporter_interface import SignalExporterInterface

logger = logging.getLogger('qdcart')


class NpySignalExporter(SignalExporterInterface):
    """
    Exporter for numpy .npy signals
    """

    @property
    def format_name(self) -> str:
        return "NPY"

    @property
    def extensions(self) -> tuple:
        return (".npy",)

    def export_signal(self, values: np.ndarray, file_path: str) -> bool:
        try:
            with open(file_path, "wb") as handle:
                np.save(handle, np.asarray(values, dtype=np.float64), allow_pickle=False)
        except OSError as error:
            logger.error(f"Error writing {file_path}: {error}")
            return False
        return True
