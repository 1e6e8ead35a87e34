"""
Quantile optimal regression tree in one dimension

In 1-d every segmentation of [1, n] is reachable by hierarchical splits,
so the tree search reduces to optimal segmentation:

    E(0) = 0,  E(j) = min_{i <= j - gamma + 1} E(i - 1) + SQL([i, j]) + lambda

SQL([i, j]) is computed for all O(n^2) intervals by scanning i downward
from each right end j while inserting y_i into an order-statistics tree.
"""
import logging
from dataclasses import replace
from typing import List, Sequence, Tuple

import numpy as np

from src.domain.entities.fit_result import FitResult
from src.domain.entities.partition import Partition, SplitNode
from src.domain.entities.rect import LatticeShape, Rect
from src.domain.exceptions import UnsupportedError
from src.domain.services.dp_solver import validate_signal
from src.domain.value_objects.quantile_level import QuantileLevel
from src.domain.value_objects.solver_config import FitMethod, SolverConfig

logger = logging.getLogger('qdcart')


class OrderStatisticsTree:
    """
    Insert-only multiset over a fixed universe of ranks 0..size-1

    Binary indexed tree holding a count and a value sum per rank; supports
    k-th smallest lookup and the sum of the k smallest values in O(log n).
    Every rank holds at most one value, so ties in the data must be
    broken when ranks are assigned.
    """

    def __init__(self, size: int):
        self.size = size
        self.counts = [0] * (size + 1)
        self.sums = [0.0] * (size + 1)
        self.total = 0
        self.top = 1 << max(size.bit_length() - 1, 0)

    def insert(self, rank: int, value: float):
        position = rank + 1
        while position <= self.size:
            self.counts[position] += 1
            self.sums[position] += value
            position += position & -position
        self.total += 1

    def select(self, k: int) -> Tuple[int, float]:
        """
        Rank of the k-th smallest stored value (1-based k) and the sum of the
        k smallest values
        """
        position = 0
        remaining = k
        below = 0.0
        step = self.top
        while step:
            following = position + step
            if following <= self.size and self.counts[following] < remaining:
                position = following
                remaining -= self.counts[following]
                below += self.sums[following]
            step >>= 1
        rank = position
        return rank, below

    def __len__(self) -> int:
        return self.total


def segment_costs(y: np.ndarray, tau: QuantileLevel) -> Tuple[np.ndarray, np.ndarray]:
    """
    SQL and empirical quantile of every interval [i, j]

    Returns two (n, n) arrays indexed [i - 1, j - 1]; entries with i > j
    are NaN.
    """
    values = np.asarray(y, dtype=np.float64).reshape(-1)
    n = values.size
    ranks = np.empty(n, dtype=np.int64)
    ranks[np.argsort(values, kind="stable")] = np.arange(n)
    ordered = np.sort(values, kind="stable").tolist()
    data = values.tolist()
    rank_of = ranks.tolist()
    t = tau.tau

    costs = np.full((n, n), np.nan)
    quantiles = np.full((n, n), np.nan)
    for j in range(n):
        tree = OrderStatisticsTree(n)
        running = 0.0
        column_cost = costs[:, j]
        column_q = quantiles[:, j]
        for i in range(j, -1, -1):
            value = data[i]
            tree.insert(rank_of[i], value)
            running += value
            m = j - i + 1
            k = tau.rank(m)
            rank, below = tree.select(k)
            q = ordered[rank]
            lower = below + q
            column_cost[i] = t * ((running - lower) - (m - k) * q) + (1.0 - t) * (k * q - lower)
            column_q[i] = q
    np.maximum(costs, 0.0, out=costs, where=~np.isnan(costs))
    return costs, quantiles


def optimal_segmentation(costs: np.ndarray, lam: float, gamma: int) -> Tuple[float, List[Tuple[int, int]]]:
    """
    Exact minimum of sum of segment costs + lambda per segment

    Segments are 1-based inclusive (start, end) pairs of length >= gamma.
    Ties prefer the smallest start, i.e. the longest final segment.
    """
    n = costs.shape[0]
    best = np.full(n + 1, np.inf)
    start = np.zeros(n + 1, dtype=np.int64)
    best[0] = 0.0
    for j in range(gamma, n + 1):
        last = j - gamma + 1
        candidates = (best[:last] + costs[:last, j - 1]) + lam
        i = int(np.argmin(candidates))
        best[j] = candidates[i]
        start[j] = i + 1
    segments = []
    j = n
    while j > 0:
        i = int(start[j])
        segments.append((i, j))
        j = i - 1
    segments.reverse()
    return float(best[n]), segments


def segmentation_tree(segments: List[Tuple[int, int]]) -> SplitNode:
    """Hierarchical split tree cutting after the first remaining segment each time"""
    node = SplitNode(Rect.interval(*segments[-1]))
    for a, b in reversed(segments[:-1]):
        node = SplitNode(Rect.interval(a, node.rect.hi[0]), 1, (SplitNode(Rect.interval(a, b)), node))
    return node


def fit_qort_path(y, cfg: SolverConfig, lambdas: Sequence[float]) -> List[FitResult]:
    """One qort1d fit per lambda, sharing the interval cost matrix"""
    array = validate_signal(y, cfg.gamma)
    if array.ndim != 1:
        raise UnsupportedError(f"qort1d needs a 1-d signal, got d = {array.ndim}")
    shape = LatticeShape(array.shape)
    costs, quantiles = segment_costs(array, cfg.tau)
    results = []
    for lam in lambdas:
        step = cfg.with_lambda(lam)
        objective, segments = optimal_segmentation(costs, step.lam, step.gamma)
        theta = np.empty_like(array)
        for a, b in segments:
            theta[a - 1:b] = quantiles[a - 1, b - 1]
        partition = Partition.from_tree(shape, segmentation_tree(segments))
        logger.info(f"qort1d fit on n={shape.N}: lambda={step.lam:g}, {len(segments)} segments, "
                    f"objective={objective:.6g}")
        results.append(FitResult(theta_hat=theta, partition=partition, objective=objective, config=step))
    return results


def fit_qort_1d(y, cfg: SolverConfig) -> FitResult:
    """Exact quantile optimal regression tree on a 1-d signal"""
    return fit_qort_path(y, replace(cfg, method=FitMethod.QORT1D), [cfg.lam])[0]
