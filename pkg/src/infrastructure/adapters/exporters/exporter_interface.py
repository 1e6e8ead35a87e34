"""
Interface for signal exporters
"""
from abc import ABC, abstractmethod

import numpy as np


class SignalExporterInterface(ABC):
    """
    Interface for signal exporters
    """

    @property
    @abstractmethod
    def format_name(self) -> str:
        """Get the name of the file format"""
        pass

    @property
    @abstractmethod
    def extensions(self) -> tuple:
        """File extensions this exporter writes, lower case with the dot"""
        pass

    @abstractmethod
    def export_signal(self, values: np.ndarray, file_path: str) -> bool:
        """
        Export an array to a file

        Args:
            values: The array to export
            file_path: Path to save the file

        Returns:
            True if export was successful, False otherwise
        """
        pass
