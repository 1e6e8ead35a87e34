"""
Exact bottom-up dynamic programming over dyadic rectangles

The penalized objective of a recursive dyadic partition splits over its
leaves, so the optimal value of a rectangle R satisfies

    OPT(R) = min( cost(R) + lambda, min over dyadic splits OPT(R1) + OPT(R2) )

where cost(R) is the sum of quantile loss about the empirical quantile
(qdcart) or the sum of squared errors about the mean (dcart). Costs do not
depend on lambda, so one cost table serves a whole lambda path.
"""
import logging
from dataclasses import dataclass, replace
from typing import Dict, List, Optional, Sequence

import numpy as np

from src.domain.entities.fit_result import FitResult
from src.domain.entities.partition import Partition, SplitNode
from src.domain.entities.rect import LatticeShape
from src.domain.exceptions import (
    DataError,
    InfeasibleConfigurationError,
    InternalConsistencyError,
    UnsupportedError,
)
from src.domain.services.lattice import DyadicIndex
from src.domain.services.quantile_core import MomentTable, empirical_quantile, merge, sql
from src.domain.value_objects.quantile_level import QuantileLevel, as_level
from src.domain.value_objects.solver_config import FitMethod, SolverConfig
from src.domain.value_objects.sorted_segment import RectCost, SortedSegment

logger = logging.getLogger('qdcart')

NO_SPLIT = 0


@dataclass(eq=False)
class DyadicCostTable:
    """
    Lambda-independent per-rectangle data: cost, fitted constant, feasibility

    ``levels`` lists the feasible keys grouped by rectangle length in
    increasing order; every rectangle's children sit in earlier groups.
    """
    index: DyadicIndex
    method: FitMethod
    tau: QuantileLevel
    gamma: int
    cost: np.ndarray
    fitted: np.ndarray
    feasible: np.ndarray
    levels: List[np.ndarray]
    segments: Optional[Dict[int, SortedSegment]] = None

    def rect_cost(self, key: int) -> RectCost:
        if not self.feasible[key]:
            raise InternalConsistencyError(f"no cost stored for infeasible rectangle {self.index.rect(key)}")
        return RectCost(sql=float(self.cost[key]), quantile=float(self.fitted[key]))


@dataclass(eq=False)
class DpTables:
    """OPT value, SPLIT decision (0 = no split, else 1-based dimension) and cost per key"""
    costs: DyadicCostTable
    lam: float
    opt: np.ndarray
    split: np.ndarray

    @property
    def index(self) -> DyadicIndex:
        return self.costs.index

    def cost(self, key: int) -> RectCost:
        return self.costs.rect_cost(key)

    @property
    def optimum(self) -> float:
        return float(self.opt[self.index.root])


def validate_signal(y, gamma: int) -> np.ndarray:
    """Reject non-finite data and a gamma exceeding the lattice size"""
    array = np.asarray(y, dtype=np.float64)
    if array.ndim == 0:
        array = array.reshape(1)
    shape = LatticeShape(array.shape)
    if not np.all(np.isfinite(array)):
        raise DataError("input contains NaN or infinite values")
    if gamma > shape.N:
        raise InfeasibleConfigurationError(
            f"gamma = {gamma} exceeds the number of cells N = {shape.N}; no partition is feasible"
        )
    return array


def _levels(index: DyadicIndex, feasible: np.ndarray) -> List[np.ndarray]:
    order = index.order[feasible[index.order]]
    lengths = index.lengths[order]
    starts = np.flatnonzero(np.diff(lengths)) + 1
    return np.split(order, starts)


def build_quantile_costs(y: np.ndarray, index: DyadicIndex, tau: QuantileLevel, gamma: int,
                         retain_segments: bool = False) -> DyadicCostTable:
    """
    SQL and empirical quantile of every feasible dyadic rectangle

    Sorted segments are built bottom-up by merging the two canonical
    children. A segment is released as soon as every rectangle using it
    as a canonical child has been built, unless ``retain_segments``.
    """
    total = len(index)
    sizes = index.sizes
    feasible = sizes >= gamma
    cost = np.full(total, np.nan)
    fitted = np.full(total, np.nan)
    canonical_dim, canonical_left, canonical_right = index.canonical

    consumers = np.zeros(total, dtype=np.int64)
    has_children = canonical_dim >= 0
    np.add.at(consumers, canonical_left[has_children], 1)
    np.add.at(consumers, canonical_right[has_children], 1)

    lo, _ = index.bounds
    flat = y.reshape(-1)
    cell_of = np.ravel_multi_index(tuple((lo - 1).T), index.shape.dims)

    dims_of = canonical_dim.tolist()
    lefts = canonical_left.tolist()
    rights = canonical_right.tolist()
    pending = consumers.tolist()
    is_feasible = feasible.tolist()
    cells = cell_of.tolist()
    length_of = index.lengths.tolist()

    segments: Dict[int, SortedSegment] = {}
    peak = 0
    built = 0
    current = None
    for key in index.order.tolist():
        if length_of[key] != current:
            if current is not None:
                logger.debug(f"Length class {current}: {built} rectangles built, {len(segments)} live segments")
            current = length_of[key]
        built += 1
        if dims_of[key] < 0:
            segment = SortedSegment(flat[cells[key]:cells[key] + 1].copy())
        else:
            left = lefts[key]
            right = rights[key]
            segment = merge(segments[left], segments[right])
            if not retain_segments:
                for child in (left, right):
                    pending[child] -= 1
                    if pending[child] == 0:
                        del segments[child]
        if is_feasible[key]:
            rect_cost = sql(tau, segment)
            cost[key] = rect_cost.sql
            fitted[key] = rect_cost.quantile
        if retain_segments or pending[key] > 0:
            segments[key] = segment
        peak = max(peak, len(segments))

    if current is not None:
        logger.debug(f"Length class {current}: {built} rectangles built, {len(segments)} live segments")
    logger.debug(f"Built quantile costs for {total} dyadic rectangles (peak {peak} live segments)")
    return DyadicCostTable(
        index=index,
        method=FitMethod.QDCART,
        tau=tau,
        gamma=gamma,
        cost=cost,
        fitted=fitted,
        feasible=feasible,
        levels=_levels(index, feasible),
        segments=segments if retain_segments else None,
    )


def build_mean_costs(y: np.ndarray, index: DyadicIndex, tau: QuantileLevel, gamma: int) -> DyadicCostTable:
    """Within-rectangle SSE and mean of every feasible dyadic rectangle from summed-area tables"""
    total = len(index)
    feasible = index.sizes >= gamma
    cost = np.full(total, np.nan)
    fitted = np.full(total, np.nan)
    lo, hi = index.bounds
    moments = MomentTable(y)
    cost[feasible] = moments.sse(lo[feasible], hi[feasible])
    fitted[feasible] = moments.means(lo[feasible], hi[feasible])
    return DyadicCostTable(
        index=index,
        method=FitMethod.DCART,
        tau=tau,
        gamma=gamma,
        cost=cost,
        fitted=fitted,
        feasible=feasible,
        levels=_levels(index, feasible),
    )


def build_cost_table(y, cfg: SolverConfig) -> DyadicCostTable:
    array = validate_signal(y, cfg.gamma)
    index = DyadicIndex(LatticeShape(array.shape))
    if cfg.method is FitMethod.DCART:
        return build_mean_costs(array, index, cfg.tau, cfg.gamma)
    if cfg.method is FitMethod.QDCART:
        return build_quantile_costs(array, index, cfg.tau, cfg.gamma, cfg.retain_segments)
    raise UnsupportedError(f"method {cfg.method.value} has no dyadic cost table")


def solve(costs: DyadicCostTable, lam: float) -> DpTables:
    """
    Run the OPT/SPLIT recurrence over all feasible rectangles

    Ties prefer no split, then the lowest dimension. Infeasible rectangles
    keep OPT = +inf, so splits with an infeasible child never win.
    """
    index = costs.index
    total = len(index)
    opt = np.full(total, np.inf)
    split = np.zeros(total, dtype=np.int8)
    children = [index.children(dim) for dim in range(index.shape.d)]
    for keys in costs.levels:
        best = costs.cost[keys] + lam
        choice = np.zeros(keys.size, dtype=np.int8)
        for dim, (left, right) in enumerate(children):
            left_keys = left[keys]
            right_keys = right[keys]
            splittable = left_keys >= 0
            candidate = np.full(keys.size, np.inf)
            candidate[splittable] = opt[left_keys[splittable]] + opt[right_keys[splittable]]
            better = candidate < best
            best = np.where(better, candidate, best)
            choice[better] = dim + 1
        opt[keys] = best
        split[keys] = choice
    return DpTables(costs=costs, lam=lam, opt=opt, split=split)


def extract_partition(tables: DpTables, shape: LatticeShape, gamma: int) -> Partition:
    """Follow SPLIT decisions top-down from the full lattice"""
    index = tables.index
    if index.shape != shape:
        raise InternalConsistencyError(f"tables were built for {index.shape}, not {shape}")
    children = {}

    def build(key: int) -> SplitNode:
        if not tables.costs.feasible[key] or not np.isfinite(tables.opt[key]):
            raise InternalConsistencyError(f"no DP entry for rectangle {index.rect(key)}")
        rect = index.rect(key)
        if index.sizes[key] < gamma:
            raise InternalConsistencyError(f"rectangle {rect} is smaller than gamma = {gamma}")
        dim = int(tables.split[key])
        if dim == NO_SPLIT:
            return SplitNode(rect)
        if dim not in children:
            children[dim] = index.children(dim - 1)
        left, right = children[dim]
        return SplitNode(rect, dim, (build(int(left[key])), build(int(right[key]))))

    return Partition.from_tree(shape, build(index.root))


def project(partition: Partition, y, tau) -> np.ndarray:
    """Replace every leaf by its empirical tau-quantile"""
    level = as_level(tau)
    values = np.asarray(y, dtype=np.float64)
    theta = np.empty_like(values)
    for leaf in partition.leaves:
        window = leaf.slices()
        theta[window] = empirical_quantile(level, SortedSegment.from_values(values[window]))
    return theta


def project_mean(partition: Partition, y) -> np.ndarray:
    """Replace every leaf by its mean"""
    values = np.asarray(y, dtype=np.float64)
    theta = np.empty_like(values)
    for leaf in partition.leaves:
        window = leaf.slices()
        theta[window] = np.mean(values[window])
    return theta


def _result(y: np.ndarray, tables: DpTables, cfg: SolverConfig) -> FitResult:
    shape = tables.index.shape
    partition = extract_partition(tables, shape, cfg.gamma)
    if cfg.method is FitMethod.DCART:
        theta = project_mean(partition, y)
    else:
        theta = project(partition, y, cfg.tau)
    logger.info(f"{cfg.method.value} fit on {shape}: lambda={cfg.lam:g}, {len(partition)} leaves, "
                f"objective={tables.optimum:.6g}")
    return FitResult(theta_hat=theta, partition=partition, objective=tables.optimum, config=cfg)


def fit_path(y, cfg: SolverConfig, lambdas: Sequence[float]) -> List[FitResult]:
    """
    One fit per lambda, sharing the cost table across the path

    Each result equals the individual fit with that lambda.
    """
    if cfg.method is FitMethod.QORT1D:
        from src.domain.services.qort import fit_qort_path
        return fit_qort_path(y, cfg, lambdas)
    array = validate_signal(y, cfg.gamma)
    costs = build_cost_table(array, cfg)
    results = []
    for lam in lambdas:
        step = cfg.with_lambda(lam)
        results.append(_result(array, solve(costs, step.lam), step))
    return results


def fit_qdcart(y, cfg: SolverConfig) -> FitResult:
    """Exact penalized quantile dyadic CART fit"""
    return fit_path(y, replace(cfg, method=FitMethod.QDCART), [cfg.lam])[0]


def fit_dcart(y, cfg: SolverConfig) -> FitResult:
    """Exact penalized least-squares dyadic CART fit; tau is ignored"""
    return fit_path(y, replace(cfg, method=FitMethod.DCART), [cfg.lam])[0]


def fit(y, cfg: SolverConfig) -> FitResult:
    return fit_path(y, cfg, [cfg.lam])[0]
