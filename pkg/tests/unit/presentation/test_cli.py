"""
Unit tests for the command-line interface
"""
import contextlib
import io
import os
import tempfile
import unittest

import numpy as np

from src.domain.exceptions import UsageError
from src.domain.services.quantile_core import check_loss
from src.infrastructure.adapters.exporters.csv_exporter import format_value
from src.presentation.cli.main import (
    EXIT_INFEASIBLE,
    EXIT_OK,
    EXIT_USAGE,
    main,
    parse_shape,
    resolve_grid,
)


class CliTestCase(unittest.TestCase):
    """Runs the CLI with captured standard output inside a temporary directory"""

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.directory.cleanup()

    def path(self, name: str) -> str:
        return os.path.join(self.directory.name, name)

    def write(self, name: str, text: str) -> str:
        file_path = self.path(name)
        with open(file_path, "w", encoding="utf-8") as handle:
            handle.write(text)
        return file_path

    def run_cli(self, *argv):
        output = io.StringIO()
        with contextlib.redirect_stdout(output):
            code = main(list(argv))
        return code, output.getvalue()

    @staticmethod
    def report(text: str) -> dict:
        return dict(line.split("=", 1) for line in text.splitlines() if "=" in line and not line.startswith("#"))


class TestParsing(unittest.TestCase):
    """Test cases for argument helpers"""

    def test_parse_shape(self):
        """d:n1,n2 with a consistent d"""
        self.assertEqual(parse_shape("2:64,32").dims, (64, 32))
        with self.assertRaises(UsageError):
            parse_shape("3:64,32")
        with self.assertRaises(UsageError):
            parse_shape("64")

    def test_resolve_grid(self):
        """Lambdas make a custom grid, no name keeps the default"""
        self.assertIsNone(resolve_grid(None, None))
        self.assertEqual(resolve_grid(None, "2,1").values, (1.0, 2.0))
        self.assertEqual(len(resolve_grid("1d", None)), 25)


class TestDenoiseCommand(CliTestCase):
    """Test cases for the denoise subcommand"""

    def test_worked_example(self):
        """Fixed lambda writes the exact fit and reports the objective"""
        source = self.write("y.csv", "0\n0\n10\n10\n")
        target = self.path("fit.csv")
        code, output = self.run_cli("denoise", source, target, "--tau", "0.5", "--lambda", "1", "--gamma", "1")
        self.assertEqual(code, EXIT_OK)
        report = self.report(output)
        self.assertEqual(report["leaves"], "2")
        self.assertEqual(float(report["objective"]), 2.0)
        with open(target, encoding="utf-8") as handle:
            self.assertEqual([float(v) for v in handle.read().split()], [0.0, 0.0, 10.0, 10.0])

    def test_objective_recomputes_from_output(self):
        """The reported objective matches the written fit"""
        rng = np.random.default_rng(8)
        y = np.repeat([0.0, 3.0], 16) + rng.standard_t(2.5, 32)
        source = self.write("y.csv", "\n".join(format_value(v) for v in y) + "\n")
        target = self.path("fit.csv")
        code, output = self.run_cli("denoise", source, target, "--tau", "0.3", "--lambda", "0.8", "--gamma", "4")
        self.assertEqual(code, EXIT_OK)
        report = self.report(output)
        theta = np.loadtxt(target)
        recomputed = check_loss(y, theta, 0.3) + 0.8 * int(report["leaves"])
        self.assertAlmostEqual(recomputed, float(report["objective"]), delta=1e-9 * float(report["objective"]))

    def test_bic_reports_selected_lambda(self):
        """--bic adds the selected lambda"""
        source = self.write("y.csv", "\n".join(["1"] * 8) + "\n")
        code, output = self.run_cli("denoise", source, self.path("fit.csv"), "--bic", "--lambdas", "0.5,2",
                                    "--gamma", "2")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(float(self.report(output)["selected_lambda"]), 2.0)

    def test_gamma_too_large(self):
        """gamma > N exits with 3"""
        source = self.write("y.csv", "1\n2\n3\n")
        code, _ = self.run_cli("denoise", source, self.path("fit.csv"), "--lambda", "1", "--gamma", "4")
        self.assertEqual(code, EXIT_INFEASIBLE)

    def test_parse_failure(self):
        """Unparseable input exits with 2"""
        source = self.write("y.csv", "1\nabc\n")
        code, _ = self.run_cli("denoise", source, self.path("fit.csv"), "--lambda", "1")
        self.assertEqual(code, EXIT_USAGE)

    def test_missing_input(self):
        """A nonexistent input file exits with 2"""
        code, _ = self.run_cli("denoise", self.path("absent.csv"), self.path("fit.csv"), "--lambda", "1")
        self.assertEqual(code, EXIT_USAGE)
        code, _ = self.run_cli("tune", self.path("absent.npy"), self.path("fit.csv"))
        self.assertEqual(code, EXIT_USAGE)

    def test_lambda_and_bic_are_exclusive(self):
        """Exactly one of --lambda and --bic"""
        source = self.write("y.csv", "1\n2\n")
        self.assertEqual(self.run_cli("denoise", source, self.path("f.csv"), "--lambda", "1", "--bic")[0], EXIT_USAGE)
        self.assertEqual(self.run_cli("denoise", source, self.path("f.csv"))[0], EXIT_USAGE)


class TestSimulateCommand(CliTestCase):
    """Test cases for the simulate subcommand"""

    def test_image_dimensions(self):
        """Scenario 5 writes 64 rows of 64 values"""
        code, output = self.run_cli("simulate", self.path("s.csv"), "--scenario", "5", "--n", "64", "--seed", "1")
        self.assertEqual(code, EXIT_OK)
        with open(self.report(output)["y"], encoding="utf-8") as handle:
            rows = handle.read().splitlines()
        self.assertEqual(len(rows), 64)
        self.assertEqual(len(rows[0].split(",")), 64)

    def test_too_small(self):
        """Scenario 2 with n = 16 exits with 2"""
        code, _ = self.run_cli("simulate", self.path("s.csv"), "--scenario", "2", "--n", "16")
        self.assertEqual(code, EXIT_USAGE)


class TestBenchmarkCommand(CliTestCase):
    """Test cases for the benchmark subcommand"""

    def test_config_file_with_override(self):
        """Flags override the config file"""
        config = self.write("bench.cfg", "scenarios=1\nsizes=32\nmethods=qdcart\nreplicates=50\nlambdas=1,4\n")
        target = self.path("bench.csv")
        code, _ = self.run_cli("benchmark", target, "--config", config, "--replicates", "2", "--gamma", "4")
        self.assertEqual(code, EXIT_OK)
        with open(target, encoding="utf-8") as handle:
            lines = handle.read().splitlines()
        self.assertEqual(lines[0], "scenario,n,method,mse_mean,mse_stderr,lambda_star,wall_time_seconds")
        self.assertTrue(lines[1].startswith("1,32,qdcart,"))

    def test_invalid_replicates(self):
        """Zero replicates exit with 2"""
        code, _ = self.run_cli("benchmark", self.path("b.csv"), "--replicates", "0")
        self.assertEqual(code, EXIT_USAGE)


class TestTuneCommand(CliTestCase):
    """Test cases for the tune subcommand"""

    def test_table_and_metadata(self):
        """Metadata lines precede the BIC table"""
        source = self.write("y.csv", "\n".join(["3"] * 16) + "\n")
        code, output = self.run_cli("tune", source, self.path("fit.csv"), "--tau", "0.5", "--grid", "custom",
                                    "--lambdas", "0.7", "--gamma", "2")
        self.assertEqual(code, EXIT_OK)
        lines = output.splitlines()
        self.assertEqual(lines[:4], ["# tau=0.5", "# sigma=0.5", "# selected_lambda=0.7", "lambda,v,loss,bic"])
        self.assertEqual(lines[4], "0.7,0,0.0,0.0")

    def test_unknown_grid(self):
        """Unknown grid names exit with 2"""
        source = self.write("y.csv", "1\n2\n")
        code, _ = self.run_cli("tune", source, self.path("fit.csv"), "--grid", "5d")
        self.assertEqual(code, EXIT_USAGE)


class TestCoverageCommand(CliTestCase):
    """Test cases for the coverage subcommand"""

    def test_report(self):
        """Proportions are printed as key=value lines"""
        rng = np.random.default_rng(3)
        source = self.write("y.csv", "\n".join(format_value(v) for v in rng.standard_normal(40)) + "\n")
        code, output = self.run_cli("coverage", source, "--gamma", "2", "--lambdas", "1", "--repetitions", "2")
        self.assertEqual(code, EXIT_OK)
        report = self.report(output)
        self.assertTrue(0.0 <= float(report["prop_median"]) <= 1.0)
        self.assertEqual(report["repetitions"], "2")


if __name__ == '__main__':
    unittest.main()
