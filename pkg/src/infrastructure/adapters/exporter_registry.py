"""
Registry for signal exporters
"""
import os
from typing import Dict, List, Optional

from src.infrastructure.adapters.exporters.csv_exporter import CsvSignalExporter
from src.infrastructure.adapters.exporters.exporter_interface import SignalExporterInterface
from src.infrastructure.adapters.exporters.npy_exporter import NpySignalExporter


class ExporterRegistry:
    """
    Registry for signal exporters
    """

    def __init__(self):
        self.exporters: Dict[str, SignalExporterInterface] = {}

    @classmethod
    def with_defaults(cls) -> "ExporterRegistry":
        """Registry holding the CSV and NPY exporters"""
        registry = cls()
        registry.register(CsvSignalExporter())
        registry.register(NpySignalExporter())
        return registry

    def register(self, exporter: SignalExporterInterface):
        """
        Register an exporter

        Args:
            exporter: The exporter to register
        """
        self.exporters[exporter.format_name.lower()] = exporter

    def get_exporter(self, format_name: str) -> Optional[SignalExporterInterface]:
        """
        Get an exporter by format name

        Args:
            format_name: The name of the file format

        Returns:
            The exporter or None if not found
        """
        return self.exporters.get(format_name.lower())

    def exporter_for(self, file_path: str) -> Optional[SignalExporterInterface]:
        """Exporter whose extensions match the file; CSV when nothing matches"""
        extension = os.path.splitext(file_path)[1].lower()
        for exporter in self.exporters.values():
            if extension in exporter.extensions:
                return exporter
        return self.get_exporter("csv")

    def get_format_names(self) -> List[str]:
        return [exporter.format_name for exporter in self.exporters.values()]
