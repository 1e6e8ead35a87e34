"""
Registry for signal importers
"""
from typing import Dict, List, Optional

from src.infrastructure.adapters.importers.csv_importer import CsvSignalImporter
from src.infrastructure.adapters.importers.importer_interface import SignalImporterInterface
from src.infrastructure.adapters.importers.npy_importer import NpySignalImporter


class ImporterRegistry:
    """
    Registry for signal importers
    """

    def __init__(self):
        self.importers: Dict[str, SignalImporterInterface] = {}

    @classmethod
    def with_defaults(cls) -> "ImporterRegistry":
        """Registry holding the NPY and CSV importers"""
        registry = cls()
        registry.register(NpySignalImporter())
        registry.register(CsvSignalImporter())
        return registry

    def register(self, importer: SignalImporterInterface):
        """
        Register an importer

        Args:
            importer: The importer to register
        """
        self.importers[importer.format_name.lower()] = importer

    def importer_for(self, file_path: str) -> Optional[SignalImporterInterface]:
        """First registered importer accepting the file, or None"""
        return next((importer for importer in self.importers.values() if importer.can_import(file_path)), None)

    def get_format_names(self) -> List[str]:
        return [importer.format_name for importer in self.importers.values()]
