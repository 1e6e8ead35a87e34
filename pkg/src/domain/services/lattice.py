"""
Lattice geometry: dyadic splits, dyadic rectangle enumeration and cell indexing
"""
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from src.domain.entities.rect import LatticeShape, Rect
from src.domain.exceptions import UsageError


def midpoint(a: int, b: int) -> int:
    """Last cell of the left half of [a, b]; the left half gets the extra cell"""
    return (a + b) // 2


def dyadic_split(r: Rect, dim: int) -> Optional[Tuple[Rect, Rect]]:
    """
    Halve ``r`` along the 1-based dimension ``dim``

    Returns None when the interval in that dimension is a single cell.
    """
    if not 1 <= dim <= r.d:
        raise UsageError(f"dimension index must be in 1..{r.d}, got {dim}")
    axis = dim - 1
    a, b = r.lo[axis], r.hi[axis]
    if a == b:
        return None
    m = midpoint(a, b)
    return r.replace_side(axis, a, m), r.replace_side(axis, m + 1, b)


def canonical_split(r: Rect) -> Optional[Tuple[int, Rect, Rect]]:
    """Split along the first non-singleton dimension (dictionary order)"""
    for dim in range(1, r.d + 1):
        halves = dyadic_split(r, dim)
        if halves is not None:
            return dim, halves[0], halves[1]
    return None


def cells(r: Rect, shape: LatticeShape) -> Iterator[int]:
    """1-based row-major linear indices of the cells of ``r``"""
    if not r.within(shape):
        raise UsageError(f"rectangle {r} lies outside lattice {shape}")
    grids = np.meshgrid(*[np.arange(a - 1, b) for a, b in zip(r.lo, r.hi)], indexing="ij")
    linear = np.ravel_multi_index(tuple(g.ravel() for g in grids), shape.dims)
    for index in linear:
        yield int(index) + 1


@dataclass
class DyadicIntervals:
    """
    All dyadic intervals of one lattice side, obtained by recursive halving of [1, n]

    Index 0 is the root [1, n]. ``left``/``right`` hold child indices, -1 for
    single cells. A side of length n has exactly 2n - 1 dyadic intervals.
    """
    n: int
    lo: List[int] = field(default_factory=list)
    hi: List[int] = field(default_factory=list)
    left: List[int] = field(default_factory=list)
    right: List[int] = field(default_factory=list)
    index: Dict[Tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        pending = deque([(1, self.n)])
        while pending:
            a, b = pending.popleft()
            self.index[(a, b)] = len(self.lo)
            self.lo.append(a)
            self.hi.append(b)
            if a < b:
                m = midpoint(a, b)
                pending.append((a, m))
                pending.append((m + 1, b))
        for a, b in zip(self.lo, self.hi):
            if a == b:
                self.left.append(-1)
                self.right.append(-1)
            else:
                m = midpoint(a, b)
                self.left.append(self.index[(a, m)])
                self.right.append(self.index[(m + 1, b)])

    def __len__(self) -> int:
        return len(self.lo)

    @cached_property
    def lengths(self) -> np.ndarray:
        return np.asarray(self.hi, dtype=np.int64) - np.asarray(self.lo, dtype=np.int64) + 1


class DyadicIndex:
    """
    Dense integer keys for the dyadic rectangles of a lattice

    A key packs the per-dimension interval indices in mixed radix, last
    dimension fastest, so table lookups are O(1) and whole-lattice tables
    are plain numpy arrays indexed by key.
    """

    def __init__(self, shape: LatticeShape):
        self.shape = shape
        self.axes = [DyadicIntervals(n) for n in shape.dims]
        self.counts = tuple(len(axis) for axis in self.axes)
        strides = [1] * shape.d
        for dim in range(shape.d - 2, -1, -1):
            strides[dim] = strides[dim + 1] * self.counts[dim + 1]
        self.strides = tuple(strides)

    def __len__(self) -> int:
        return int(np.prod(self.counts))

    @property
    def root(self) -> int:
        return 0

    def key(self, r: Rect) -> int:
        """Key of a dyadic rectangle; raises UsageError for non-dyadic ones"""
        key = 0
        for dim, (a, b) in enumerate(zip(r.lo, r.hi)):
            position = self.axes[dim].index.get((a, b))
            if position is None:
                raise UsageError(f"{r} is not a dyadic rectangle of lattice {self.shape}")
            key += position * self.strides[dim]
        return key

    def rect(self, key: int) -> Rect:
        positions = self.positions[key]
        lo = tuple(self.axes[dim].lo[p] for dim, p in enumerate(positions))
        hi = tuple(self.axes[dim].hi[p] for dim, p in enumerate(positions))
        return Rect(lo, hi)

    @cached_property
    def positions(self) -> np.ndarray:
        """(keys, d) matrix of per-dimension interval indices"""
        grid = np.unravel_index(np.arange(len(self)), self.counts)
        return np.stack(grid, axis=1)

    @cached_property
    def sides(self) -> np.ndarray:
        """(keys, d) matrix of side lengths"""
        return np.stack(
            [self.axes[dim].lengths[self.positions[:, dim]] for dim in range(self.shape.d)], axis=1
        )

    @cached_property
    def bounds(self) -> Tuple[np.ndarray, np.ndarray]:
        """(keys, d) matrices of 1-based inclusive lower and upper bounds"""
        lo = np.stack(
            [np.asarray(self.axes[dim].lo)[self.positions[:, dim]] for dim in range(self.shape.d)], axis=1
        )
        hi = np.stack(
            [np.asarray(self.axes[dim].hi)[self.positions[:, dim]] for dim in range(self.shape.d)], axis=1
        )
        return lo, hi

    @cached_property
    def sizes(self) -> np.ndarray:
        return np.prod(self.sides, axis=1)

    @cached_property
    def lengths(self) -> np.ndarray:
        return np.sum(self.sides, axis=1)

    @cached_property
    def order(self) -> np.ndarray:
        """Keys sorted by rectangle length, ties by key; children precede parents"""
        return np.argsort(self.lengths, kind="stable")

    def children(self, dim: int) -> Tuple[np.ndarray, np.ndarray]:
        """
        Child keys of the dyadic split along 0-based ``dim`` for every key

        Both arrays hold -1 where the interval in ``dim`` is a single cell.
        """
        axis = self.axes[dim]
        positions = self.positions[:, dim]
        left_pos = np.asarray(axis.left, dtype=np.int64)[positions]
        right_pos = np.asarray(axis.right, dtype=np.int64)[positions]
        base = np.arange(len(self)) - positions * self.strides[dim]
        splittable = left_pos >= 0
        left = np.where(splittable, base + left_pos * self.strides[dim], -1)
        right = np.where(splittable, base + right_pos * self.strides[dim], -1)
        return left, right

    @cached_property
    def canonical(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        (dim, left, right) arrays of the canonical split of every key

        dim is 0-based and -1 for single cells.
        """
        total = len(self)
        dims = np.full(total, -1, dtype=np.int64)
        left = np.full(total, -1, dtype=np.int64)
        right = np.full(total, -1, dtype=np.int64)
        for dim in range(self.shape.d):
            child_left, child_right = self.children(dim)
            take = (dims < 0) & (child_left >= 0)
            dims[take] = dim
            left[take] = child_left[take]
            right[take] = child_right[take]
        return dims, left, right


def enumerate_dyadic_rects(shape: LatticeShape) -> Iterator[Tuple[int, Rect]]:
    """
    Every dyadic rectangle once, in nondecreasing order of length

    Both children of every dyadic split of a rectangle are yielded before
    the rectangle itself.
    """
    index = DyadicIndex(shape)
    for key in index.order:
        yield int(key), index.rect(int(key))
