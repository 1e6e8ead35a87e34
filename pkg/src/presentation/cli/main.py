"""
Command-line front end: denoise | simulate | benchmark | tune | coverage

Reports go to standard output as key=value lines (tune adds a CSV table);
log messages go to standard error.
"""
import argparse
import logging
import sys
from typing import Any, Dict, List, Optional, Sequence

from src.application.services.benchmark_orchestrator import BenchmarkOrchestrator
from src.application.use_cases.denoise_signal import DenoiseSignalUseCase
from src.application.use_cases.evaluate_coverage import EvaluateCoverageUseCase
from src.application.use_cases.run_benchmark import RunBenchmarkUseCase
from src.application.use_cases.simulate_scenario import SimulateScenarioUseCase
from src.application.use_cases.tune_lambda import TuneLambdaUseCase
from src.domain.entities.rect import LatticeShape
from src.domain.exceptions import (
    InfeasibleConfigurationError,
    UnsupportedError,
    UsageError,
)
from src.domain.services.tuning import grid_by_name
from src.domain.value_objects.bench_spec import BenchSpec
from src.domain.value_objects.lambda_grid import DfMode, LambdaGrid
from src.domain.value_objects.solver_config import FitMethod
from src.infrastructure.adapters.exporter_registry import ExporterRegistry
from src.infrastructure.adapters.exporters.csv_exporter import format_value
from src.infrastructure.adapters.importer_registry import ImporterRegistry
from src.infrastructure.config.config_file import read_options
from src.infrastructure.utils.logging import enable_debug, set_quiet

logger = logging.getLogger('qdcart')

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3


class _ArgumentParser(argparse.ArgumentParser):
    """argparse reports bad flags through UsageError instead of exiting"""

    def error(self, message):
        raise UsageError(message)


def parse_shape(text: str) -> LatticeShape:
    """
    Parse ``d:n1[,n2...]`` into a lattice shape

    The leading d must agree with the number of side lengths.
    """
    d_part, separator, sides = text.partition(":")
    try:
        dims = tuple(int(n) for n in sides.split(",")) if separator else ()
        d = int(d_part)
    except ValueError:
        raise UsageError(f"invalid --shape '{text}' (expected d:n1[,n2...])") from None
    if not dims or d != len(dims):
        raise UsageError(f"invalid --shape '{text}': d = {d_part} but {len(dims)} side lengths given")
    return LatticeShape(dims)


def parse_floats(text: str, name: str) -> List[float]:
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise UsageError(f"invalid {name} '{text}' (expected comma-separated numbers)") from None


def resolve_grid(name: Optional[str], lambdas: Optional[str]) -> Optional[LambdaGrid]:
    """Named grid, or custom from --lambdas; None leaves the per-dimension default"""
    if lambdas is not None and name in (None, "custom"):
        return grid_by_name("custom", parse_floats(lambdas, "--lambdas"))
    if name is None:
        return None
    return grid_by_name(name)


def exit_code(error: BaseException) -> int:
    if isinstance(error, InfeasibleConfigurationError):
        return EXIT_INFEASIBLE
    if isinstance(error, (UsageError, UnsupportedError)):
        return EXIT_USAGE
    return EXIT_INTERNAL


def _report(pairs: Sequence) -> None:
    for key, value in pairs:
        text = format_value(value) if isinstance(value, float) else value
        print(f"{key}={text}")


def _add_signal_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--gamma", type=int, default=None, help="minimum leaf size (default: 8 in 1-d, ceil(log2 N) otherwise)")
    parser.add_argument("--method", default="qdcart", help="qdcart | dcart | qort1d")
    parser.add_argument("--shape", default=None, help="reshape the input onto d:n1[,n2...]")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="qdcart", description="Quantile dyadic CART denoising")
    parser.add_argument("--verbose", action="store_true", help="debug logging")
    parser.add_argument("--quiet", action="store_true", help="warnings and errors only")
    commands = parser.add_subparsers(dest="command", parser_class=_ArgumentParser)
    commands.required = True

    denoise = commands.add_parser("denoise", help="fit a signal file")
    denoise.add_argument("input")
    denoise.add_argument("output")
    denoise.add_argument("--tau", default="0.5", help="quantile level(s), comma separated")
    penalty = denoise.add_mutually_exclusive_group(required=True)
    penalty.add_argument("--lambda", dest="lam", type=float, help="fixed penalty")
    penalty.add_argument("--bic", action="store_true", help="select lambda by BIC")
    denoise.add_argument("--grid", default=None, help="BIC grid: 1d | 2d | qtvd | bic1d | custom")
    denoise.add_argument("--lambdas", default=None, help="values of a custom BIC grid")
    denoise.add_argument("--df", default=None, help="BIC degrees of freedom: jump | leaf (default: jump in 1-d, leaf otherwise)")
    _add_signal_options(denoise)

    simulate = commands.add_parser("simulate", help="write a simulated scenario")
    simulate.add_argument("output")
    simulate.add_argument("--scenario", type=int, required=True)
    simulate.add_argument("--n", type=int, required=True)
    simulate.add_argument("--seed", type=int, default=0)

    benchmark = commands.add_parser("benchmark", help="oracle-MSE Monte-Carlo benchmark")
    benchmark.add_argument("output")
    benchmark.add_argument("--config", default=None, help="key=value file; flags override it")
    benchmark.add_argument("--scenarios", default=None)
    benchmark.add_argument("--sizes", default=None)
    benchmark.add_argument("--methods", default=None)
    benchmark.add_argument("--replicates", type=int, default=None)
    benchmark.add_argument("--grid", default=None)
    benchmark.add_argument("--lambdas", default=None)
    benchmark.add_argument("--gamma", type=int, default=None)
    benchmark.add_argument("--tau", type=float, default=None)
    benchmark.add_argument("--seed", dest="base_seed", type=int, default=None)
    benchmark.add_argument("--full", action="store_true", default=None, help="also write the per-lambda surface")

    tune = commands.add_parser("tune", help="select lambda by BIC and print the BIC table")
    tune.add_argument("input")
    tune.add_argument("output")
    tune.add_argument("--tau", type=float, default=0.5)
    tune.add_argument("--grid", default=None, help="1d | 2d | qtvd | bic1d | custom")
    tune.add_argument("--lambdas", default=None)
    tune.add_argument("--df", default=None, help="jump | leaf (default: jump in 1-d, leaf otherwise)")
    _add_signal_options(tune)

    coverage = commands.add_parser("coverage", help="held-out calibration of 1-d quantile fits")
    coverage.add_argument("input")
    coverage.add_argument("--gamma", type=int, default=8)
    coverage.add_argument("--grid", default=None, help="1d | 2d | qtvd | bic1d | custom (default: bic1d)")
    coverage.add_argument("--lambdas", default=None)
    coverage.add_argument("--repetitions", type=int, default=100)
    coverage.add_argument("--seed", type=int, default=0)
    coverage.add_argument("--method", default="qdcart")
    return parser


def _shape(args) -> Optional[LatticeShape]:
    return parse_shape(args.shape) if args.shape else None


def _df_mode(args) -> Optional[DfMode]:
    return DfMode.parse(args.df) if args.df else None


def run_denoise(args) -> int:
    use_case = DenoiseSignalUseCase(ImporterRegistry.with_defaults(), ExporterRegistry.with_defaults())
    outcomes = use_case.execute(
        args.input,
        args.output,
        taus=parse_floats(args.tau, "--tau"),
        lam=None if args.bic else args.lam,
        gamma=args.gamma,
        method=FitMethod.parse(args.method),
        shape=_shape(args),
        grid=resolve_grid(args.grid, args.lambdas),
        df_mode=_df_mode(args),
    )
    for outcome in outcomes:
        pairs = [("tau", float(outcome.fit.tau)), ("objective", outcome.fit.objective),
                 ("leaves", outcome.fit.leaf_count)]
        if outcome.selected_lambda is not None:
            pairs.append(("selected_lambda", outcome.selected_lambda))
        pairs.append(("output", outcome.output_path))
        _report(pairs)
    return EXIT_OK


def run_simulate(args) -> int:
    dataset, y_path, theta_path = SimulateScenarioUseCase(ExporterRegistry.with_defaults()).execute(
        args.scenario, args.n, args.seed, args.output
    )
    _report([("scenario", dataset.scenario.id), ("n", dataset.scenario.n), ("seed", dataset.seed),
             ("y", y_path), ("theta", theta_path)])
    return EXIT_OK


def bench_options(args) -> Dict[str, Any]:
    """Config file options overridden by explicitly given flags, grid resolved"""
    options: Dict[str, Any] = read_options(args.config) if args.config else {}
    for key in ("scenarios", "sizes", "methods", "replicates", "grid", "lambdas", "gamma", "tau",
                "base_seed", "full"):
        value = getattr(args, key)
        if value is not None:
            options[key] = value
    if "seed" in options and "base_seed" not in options:
        options["base_seed"] = options.pop("seed")
    options["grid"] = resolve_grid(options.get("grid"), options.pop("lambdas", None))
    return options


def run_benchmark(args) -> int:
    spec = BenchSpec.from_options(bench_options(args))
    orchestrator = BenchmarkOrchestrator()
    orchestrator.set_progress_callback(lambda percentage, message: logger.debug(f"[{percentage}%] {message}"))
    rows = RunBenchmarkUseCase(orchestrator).execute(spec, args.output)
    _report([("rows", len(rows)), ("output", args.output)])
    return EXIT_OK


def run_tune(args) -> int:
    outcome = TuneLambdaUseCase(ImporterRegistry.with_defaults(), ExporterRegistry.with_defaults()).execute(
        args.input, args.output, resolve_grid(args.grid, args.lambdas), tau=args.tau, gamma=args.gamma,
        df_mode=_df_mode(args), method=FitMethod.parse(args.method), shape=_shape(args),
    )
    print(f"# tau={format_value(float(outcome.fit.tau))}")
    print(f"# sigma={format_value(outcome.sigma)}")
    print(f"# selected_lambda={format_value(outcome.lam)}")
    print("lambda,v,loss,bic")
    for score in outcome.scores:
        print(f"{format_value(score.lam)},{score.v},{format_value(score.loss)},{format_value(score.bic)}")
    return EXIT_OK


def run_coverage(args) -> int:
    report = EvaluateCoverageUseCase(ImporterRegistry.with_defaults()).execute(
        args.input, gamma=args.gamma, grid=resolve_grid(args.grid, args.lambdas),
        repetitions=args.repetitions, seed=args.seed, method=FitMethod.parse(args.method),
    )
    _report([("prop_median", report.prop_median), ("coverage_80", report.coverage_80),
             ("repetitions", report.repetitions)])
    return EXIT_OK


COMMANDS = {
    "denoise": run_denoise,
    "simulate": run_simulate,
    "benchmark": run_benchmark,
    "tune": run_tune,
    "coverage": run_coverage,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one subcommand and return its exit status"""
    try:
        args = build_parser().parse_args(argv)
        if args.verbose:
            enable_debug()
        elif args.quiet:
            set_quiet()
        return COMMANDS[args.command](args)
    except Exception as error:
        code = exit_code(error)
        if code == EXIT_INTERNAL:
            logger.debug("Unexpected failure", exc_info=True)
        logger.error(str(error))
        return code


if __name__ == "__main__":
    sys.exit(main())
