"""
Importer for plain CSV signals

1-d signals hold one value per line; 2-d signals hold one lattice row per
line with comma-separated values. No header, '.' as decimal separator.
"""
import logging
import os
from typing import List, Optional

import numpy as np

from src.domain.entities.rect import LatticeShape
from src.domain.exceptions import SignalParseError
from src.infrastructure.adapters.importers.importer_interface import SignalImporterInterface

logger = logging.getLogger('qdcart')


def reshape_signal(values: np.ndarray, shape: Optional[LatticeShape]) -> np.ndarray:
    """Reshape parsed values row-major onto ``shape`` when one is given"""
    if shape is None:
        return values
    if values.size != shape.N:
        raise SignalParseError(f"expected {shape.N} values for lattice {shape}, found {values.size}")
    return values.reshape(shape.dims)


class CsvSignalImporter(SignalImporterInterface):
    """
    Importer for plain CSV signals
    """

    @property
    def format_name(self) -> str:
        return "CSV"

    def can_import(self, file_path: str) -> bool:
        return os.path.splitext(file_path)[1].lower() in (".csv", ".txt", "")

    def import_signal(self, file_path: str, shape: Optional[LatticeShape] = None) -> np.ndarray:
        """Parse a CSV file; raises SignalParseError with line and column"""
        try:
            with open(file_path, encoding="utf-8") as handle:
                text = handle.read()
        except UnicodeDecodeError as error:
            raise SignalParseError(f"{file_path} is not valid UTF-8: {error}") from None
        except OSError as error:
            raise SignalParseError(f"cannot read {file_path}: {error.strerror or error}") from None
        return reshape_signal(self.parse(text), shape)

    def parse(self, text: str) -> np.ndarray:
        lines = text.splitlines()
        trailing = 0
        while lines and not lines[-1].strip():
            lines.pop()
            trailing += 1
        if trailing and lines:
            logger.warning(f"Ignoring {trailing} blank line(s) at the end of the input")
        if not lines:
            raise SignalParseError("the input contains no values", line=1)

        rows: List[List[float]] = []
        for line_number, line in enumerate(lines, start=1):
            if not line.strip():
                raise SignalParseError("blank line inside the data", line=line_number, column=1)
            row = []
            column = 1
            for token in line.split(","):
                try:
                    row.append(float(token))
                except ValueError:
                    offset = len(token) - len(token.lstrip())
                    raise SignalParseError(
                        f"cannot parse {token.strip()!r} as a number", line=line_number, column=column + offset
                    ) from None
                column += len(token) + 1
            if rows and len(row) != len(rows[0]):
                raise SignalParseError(
                    f"expected {len(rows[0])} values per line, found {len(row)}", line=line_number, column=1
                )
            rows.append(row)

        values = np.asarray(rows, dtype=np.float64)
        if values.shape[1] == 1:
            values = values[:, 0]
        logger.debug(f"Parsed CSV signal of shape {values.shape}")
        return values
