"""
Use case for running the oracle-MSE benchmark and writing its tables
"""
from typing import List

from src.domain.value_objects.bench_spec import BENCH_HEADER, SURFACE_HEADER, BenchRow, BenchSpec
from src.infrastructure.adapters.exporters.csv_exporter import write_table
from src.application.use_cases.signal_io import suffixed


class RunBenchmarkUseCase:
    """
    Use case for running a benchmark
    """

    def __init__(self, orchestrator):
        self.orchestrator = orchestrator

    def execute(self, spec: BenchSpec, output_path: str) -> List[BenchRow]:
        """
        Run the benchmark and write one row per (scenario, n, method)

        With ``spec.full`` the per-lambda surface goes to <stem>_surface.csv.
        """
        rows, surface = self.orchestrator.run(spec)
        write_table(output_path, BENCH_HEADER, (row.as_record() for row in rows))
        if spec.full:
            write_table(suffixed(output_path, "_surface"), SURFACE_HEADER, (point.as_record() for point in surface))
        return rows
