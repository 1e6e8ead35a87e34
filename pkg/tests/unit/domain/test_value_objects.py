"""
Unit tests for configuration value objects
"""
import unittest

from src.domain.exceptions import ConfigurationError, UsageError
from src.domain.value_objects.bench_spec import BenchRow, BenchSpec
from src.domain.value_objects.lambda_grid import LambdaGrid
from src.domain.value_objects.quantile_level import QuantileLevel
from src.domain.value_objects.solver_config import FitMethod, SolverConfig


class TestSolverConfig(unittest.TestCase):
    """Test cases for SolverConfig"""

    def test_defaults(self):
        """Median, unit penalty, gamma 1, qdcart"""
        cfg = SolverConfig()
        self.assertEqual(cfg.tau, QuantileLevel(0.5))
        self.assertEqual(cfg.lam, 1.0)
        self.assertEqual(cfg.gamma, 1)
        self.assertEqual(cfg.method, FitMethod.QDCART)

    def test_validation(self):
        """lambda must be positive and gamma at least one"""
        with self.assertRaises(ConfigurationError):
            SolverConfig(lam=0.0)
        with self.assertRaises(ConfigurationError):
            SolverConfig(lam=float("inf"))
        with self.assertRaises(ConfigurationError):
            SolverConfig(gamma=0)
        with self.assertRaises(ConfigurationError):
            SolverConfig(tau=1.0)

    def test_method_names(self):
        """Methods parse from their names"""
        self.assertEqual(SolverConfig(method="dcart").method, FitMethod.DCART)
        self.assertFalse(FitMethod.DCART.is_quantile)
        with self.assertRaises(UsageError):
            FitMethod.parse("lasso")

    def test_with_lambda(self):
        """Changing lambda keeps everything else"""
        cfg = SolverConfig(tau=0.9, gamma=3).with_lambda(4.0)
        self.assertEqual((cfg.tau.tau, cfg.lam, cfg.gamma), (0.9, 4.0, 3))


class TestBenchSpec(unittest.TestCase):
    """Test cases for benchmark specifications"""

    def test_from_options(self):
        """String options from a config file are converted"""
        spec = BenchSpec.from_options({
            "scenarios": "1,3", "sizes": "128", "methods": "qdcart", "replicates": "10",
            "tau": "0.9", "base_seed": "5", "full": "yes", "grid": LambdaGrid.custom([1.0, 2.0]),
        })
        self.assertEqual(spec.scenarios, (1, 3))
        self.assertEqual(spec.sizes, (128,))
        self.assertEqual(spec.methods, (FitMethod.QDCART,))
        self.assertEqual(spec.replicates, 10)
        self.assertEqual(spec.tau.tau, 0.9)
        self.assertEqual(spec.base_seed, 5)
        self.assertTrue(spec.full)
        self.assertEqual(len(spec.grid), 2)

    def test_invariants(self):
        """Replicates positive, methods nonempty, qort1d only in 1-d"""
        with self.assertRaises(ConfigurationError):
            BenchSpec(replicates=0)
        with self.assertRaises(ConfigurationError):
            BenchSpec(methods=())
        with self.assertRaises(UsageError):
            BenchSpec(scenarios=(5,), sizes=(16,), methods=(FitMethod.QORT1D,))
        with self.assertRaises(ConfigurationError):
            BenchSpec.from_options({"replicates": "many"})

    def test_cases(self):
        """Every scenario with every size"""
        spec = BenchSpec(scenarios=(1, 5), sizes=(32, 64))
        self.assertEqual([(c.id, c.n) for c in spec.cases()], [(1, 32), (1, 64), (5, 32), (5, 64)])

    def test_row_record(self):
        """Rows serialize in header order"""
        row = BenchRow(1, 512, FitMethod.DCART, 3.0, 0.1, 2.0, 1.5)
        self.assertEqual(row.as_record(), (1, 512, "dcart", 3.0, 0.1, 2.0, 1.5))


if __name__ == '__main__':
    unittest.main()
