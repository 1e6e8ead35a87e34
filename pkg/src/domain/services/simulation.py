"""
Seeded generators for the simulation scenarios

Signals take values in {-1, 0, 1}. Case boundaries are evaluated in exact
integer arithmetic (inequalities multiplied through by their
denominators), with the first matching case winning.
"""
from typing import Sequence

import numpy as np

from src.domain.entities.dataset import Dataset, Scenario
from src.domain.value_objects.noise_spec import NoiseLaw, NoiseSpec


def _scenario_1(n: int) -> np.ndarray:
    i = np.arange(1, n + 1)
    f = n // 5
    return (((i >= f + 1) & (i <= 2 * f)) | (i >= 3 * f + 1)).astype(np.float64)


def _scenario_2(n: int) -> np.ndarray:
    i = np.arange(1, n + 1)
    a = n // 3
    b = n // 32
    ones = ((i >= a + 1) & (i <= a + b)) \
        | ((i >= a + 2 * b + 1) & (i <= a + 3 * b)) \
        | (i >= a + 4 * b + 1)
    return ones.astype(np.float64)


def _scenario_5(n: int) -> np.ndarray:
    i, j = np.meshgrid(np.arange(1, n + 1), np.arange(1, n + 1), indexing="ij")
    inside = (5 * i > n) & (5 * i < 3 * n) & (5 * j > n) & (5 * j < 3 * n)
    return inside.astype(np.float64)


def _scenario_6(n: int) -> np.ndarray:
    i, j = np.meshgrid(np.arange(1, n + 1), np.arange(1, n + 1), indexing="ij")
    radius = (4 * n) ** 2
    upper = (20 * i - 5 * n) ** 2 + (20 * j - 5 * n) ** 2 < radius
    lower = (20 * i - 15 * n) ** 2 + (20 * j - 15 * n) ** 2 < radius
    theta = np.zeros((n, n))
    theta[lower] = -1.0
    theta[upper] = 1.0
    return theta


def _scenario_7(n: int) -> np.ndarray:
    i, j = np.meshgrid(np.arange(1, n + 1), np.arange(1, n + 1), indexing="ij")
    band = (8 * i > 2 * n) & (8 * i < 6 * n) & (8 * j > 2 * n) & (8 * j < 3 * n)
    step = (8 * i > 5 * n) & (8 * i < 6 * n) & (8 * j >= 3 * n) & (8 * j < 6 * n)
    corner = (8 * i > 6 * n) & (8 * j > 6 * n)
    return np.select([band, step, corner], [1.0, 1.0, -1.0], default=0.0)


SIGNALS = {
    1: _scenario_1,
    2: _scenario_2,
    3: _scenario_1,
    4: _scenario_2,
    5: _scenario_5,
    6: _scenario_6,
    7: _scenario_7,
}


def signal(scenario: Scenario) -> np.ndarray:
    """True signal theta_star of a scenario"""
    return SIGNALS[scenario.id](scenario.n)


def generator(spec: NoiseSpec) -> np.random.Generator:
    """Counter-based Philox stream keyed by the seed and the (scenario, n) tuple"""
    sequence = np.random.SeedSequence(entropy=int(spec.seed), spawn_key=tuple(int(s) for s in spec.stream))
    return np.random.Generator(np.random.Philox(sequence))


def noise(spec: NoiseSpec, shape: Sequence[int]) -> np.ndarray:
    """
    Independent draws of the noise law over a lattice

    student-t(df) is normal / sqrt(chi2(df) / df), Cauchy is the tangent of
    a uniform angle, and the heteroscedastic law scales a standard normal
    by sqrt(2 i / N + 1) with i the 1-based linear cell index.
    """
    dims = tuple(int(n) for n in shape)
    rng = generator(spec)
    if spec.law is NoiseLaw.STUDENT_T:
        normal = rng.standard_normal(dims)
        chi2 = rng.chisquare(spec.df, dims)
        return normal / np.sqrt(chi2 / spec.df)
    if spec.law is NoiseLaw.CAUCHY:
        return np.tan(np.pi * (rng.random(dims) - 0.5))
    size = int(np.prod(dims))
    i = np.arange(1, size + 1).reshape(dims)
    return rng.standard_normal(dims) * np.sqrt(2.0 * i / size + 1.0)


def generate(scenario: Scenario, seed: int) -> Dataset:
    """y = theta_star + noise with the scenario's noise law"""
    theta_star = signal(scenario)
    spec = NoiseSpec(law=scenario.noise_law, seed=seed, stream=(scenario.id, scenario.n))
    y = theta_star + noise(spec, theta_star.shape)
    return Dataset(y=y, theta_star=theta_star, scenario=scenario, seed=seed)
