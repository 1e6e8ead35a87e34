"""
Importer for numpy .npy signals
"""
import os
from typing import Optional

import numpy as np

from src.domain.entities.rect import LatticeShape
from src.domain.exceptions import SignalParseError
from src.infrastructure.adapters.importers.csv_importer import reshape_signal
from src.infrastructure.adapters.importers.importer_interface import SignalImporterInterface


class NpySignalImporter(SignalImporterInterface):
    """
    Importer for numpy .npy signals
    """

    @property
    def format_name(self) -> str:
        return "NPY"

    def can_import(self, file_path: str) -> bool:
        return os.path.splitext(file_path)[1].lower() == ".npy"

    def import_signal(self, file_path: str, shape: Optional[LatticeShape] = None) -> np.ndarray:
        try:
            values = np.load(file_path, allow_pickle=False)
        except OSError as error:
            raise SignalParseError(f"cannot read {file_path}: {error.strerror or error}") from None
        except ValueError as error:
            raise SignalParseError(f"cannot read {file_path} as a numpy array: {error}") from None
        if values.dtype.kind not in "biuf":
            raise SignalParseError(f"{file_path} holds {values.dtype} data, expected numbers")
        return reshape_signal(values.astype(np.float64), shape)
