"""
Exhaustive reference solvers used by the exactness tests

Every recursive dyadic partition (or every segmentation in 1-d) is
enumerated explicitly. Objectives are accumulated in the same order as
the solvers so the minima can be compared with zero tolerance.
"""
from itertools import product
from typing import Callable, Dict, List, Tuple

import numpy as np

from src.domain.entities.rect import LatticeShape, Rect
from src.domain.services.lattice import dyadic_split


def rdp_objectives(shape: LatticeShape, leaf_cost: Callable[[Rect], float], lam: float,
                   gamma: int) -> List[float]:
    """
    Objective of every gamma-feasible recursive dyadic partition

    A leaf contributes cost + lam, a split node the sum of its two
    subtrees.
    """
    memo: Dict[Rect, List[float]] = {}

    def enumerate_rect(rect: Rect) -> List[float]:
        if rect in memo:
            return memo[rect]
        values: List[float] = []
        if rect.size >= gamma:
            values.append(leaf_cost(rect) + lam)
            for dim in range(1, rect.d + 1):
                halves = dyadic_split(rect, dim)
                if halves is None:
                    continue
                left = enumerate_rect(halves[0])
                right = enumerate_rect(halves[1])
                values.extend(a + b for a, b in product(left, right))
        memo[rect] = values
        return values

    return enumerate_rect(shape.full)


def segmentations(n: int, gamma: int) -> List[List[Tuple[int, int]]]:
    """All segmentations of [1, n] into consecutive 1-based intervals of length >= gamma"""
    results: List[List[Tuple[int, int]]] = []

    def extend(start: int, prefix: List[Tuple[int, int]]):
        if start > n:
            results.append(list(prefix))
            return
        for end in range(start + gamma - 1, n + 1):
            prefix.append((start, end))
            extend(end + 1, prefix)
            prefix.pop()

    extend(1, [])
    return results


def segmentation_objective(costs: np.ndarray, segments: List[Tuple[int, int]], lam: float) -> float:
    total = 0.0
    for a, b in segments:
        total = (total + costs[a - 1, b - 1]) + lam
    return total


def tree_objective(node, leaf_cost: Callable[[Rect], float], lam: float) -> float:
    """Objective of a split tree, accumulated like the dynamic program"""
    if node.is_leaf:
        return leaf_cost(node.rect) + lam
    left, right = node.children
    return tree_objective(left, leaf_cost, lam) + tree_objective(right, leaf_cost, lam)
