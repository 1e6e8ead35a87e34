"""
Interface for signal importers
"""
from abc import ABC, abstractmethod
from typing import Optional

import numpy as np

from src.domain.entities.rect import LatticeShape


class SignalImporterInterface(ABC):
    """
    Interface for signal importers
    """

    @property
    @abstractmethod
    def format_name(self) -> str:
        """Get the name of the file format"""
        pass

    @abstractmethod
    def import_signal(self, file_path: str, shape: Optional[LatticeShape] = None) -> np.ndarray:
        """
        Import an observation array from a file

        Args:
            file_path: Path to the signal file
            shape: Lattice to reshape the values into (row-major); inferred when None

        Returns:
            The observations as a float64 array
        """
        pass

    @abstractmethod
    def can_import(self, file_path: str) -> bool:
        """
        Check if this importer can import the given file

        Args:
            file_path: Path to the signal file

        Returns:
            True if this importer can import the file, False otherwise
        """
        pass
