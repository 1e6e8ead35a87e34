"""
Shared file handling for use cases
"""
import os
from typing import Optional

import numpy as np

from src.domain.entities.rect import LatticeShape
from src.domain.exceptions import UsageError


def load_signal(importer_registry, file_path: str, shape: Optional[LatticeShape] = None) -> np.ndarray:
    importer = importer_registry.importer_for(file_path)
    if not importer:
        formats = ", ".join(importer_registry.get_format_names())
        raise UsageError(f"No importer found for file: {file_path} (supported: {formats})")
    return importer.import_signal(file_path, shape)


def save_signal(exporter_registry, values: np.ndarray, file_path: str) -> str:
    exporter = exporter_registry.exporter_for(file_path)
    if not exporter:
        formats = ", ".join(exporter_registry.get_format_names())
        raise UsageError(f"No exporter found for file: {file_path} (supported: {formats})")
    if not exporter.export_signal(values, file_path):
        raise OSError(f"Failed to write {file_path}")
    return file_path


def suffixed(file_path: str, suffix: str) -> str:
    """Insert ``suffix`` between the file stem and its extension"""
    stem, extension = os.path.splitext(file_path)
    return f"{stem}{suffix}{extension or '.csv'}"
