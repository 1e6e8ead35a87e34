"""
Exporter for plain CSV signals and result tables
"""
import csv
import logging
from typing import Iterable, Sequence

import numpy as np

from src.infrastructure.adapters.exporters.exporter_interface import SignalExporterInterface

logger = logging.getLogger('qdcart')


def format_value(value: float) -> str:
    """Shortest decimal string that round-trips to the same 64-bit float"""
    return repr(float(value))


class CsvSignalExporter(SignalExporterInterface):
    """
    Exporter for plain CSV signals

    1-d arrays are written one value per line, higher-dimensional arrays
    one row of the last axis per line (row-major).
    """

    @property
    def format_name(self) -> str:
        return "CSV"

    @property
    def extensions(self) -> tuple:
        return (".csv", ".txt")

    def export_signal(self, values: np.ndarray, file_path: str) -> bool:
        array = np.asarray(values, dtype=np.float64)
        if array.ndim <= 1:
            lines = [format_value(v) for v in array.reshape(-1)]
        else:
            rows = array.reshape(-1, array.shape[-1])
            lines = [",".join(format_value(v) for v in row) for row in rows]
        try:
            with open(file_path, "w", encoding="utf-8", newline="\n") as handle:
                handle.write("\n".join(lines) + "\n")
        except OSError as error:
            logger.error(f"Error writing {file_path}: {error}")
            return False
        return True


def write_table(file_path: str, header: Sequence[str], records: Iterable[Sequence]) -> None:
    """Write a headed CSV table; floats use round-trip formatting"""
    with open(file_path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        for record in records:
            writer.writerow([format_value(v) if isinstance(v, float) else v for v in record])
