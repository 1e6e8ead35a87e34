"""
Lattice shape and discrete rectangle entities
"""
from dataclasses import dataclass
from functools import reduce
from operator import mul
from typing import Tuple

from src.domain.exceptions import ConfigurationError, UnsupportedError

MAX_DIMENSION = 4


@dataclass(frozen=True)
class LatticeShape:
    """
    Side lengths n_1..n_d of a d-dimensional lattice

    Cells are addressed row-major (first dimension slowest), which matches
    numpy's C order for an array of shape ``dims``.
    """
    dims: Tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(n) for n in self.dims)
        if not dims:
            raise ConfigurationError("a lattice needs at least one dimension")
        if len(dims) > MAX_DIMENSION:
            raise UnsupportedError(f"lattices with d > {MAX_DIMENSION} are not supported (d = {len(dims)})")
        if any(n < 1 for n in dims):
            raise ConfigurationError(f"every side length must be >= 1, got {dims}")
        object.__setattr__(self, "dims", dims)

    @classmethod
    def of(cls, *dims: int) -> "LatticeShape":
        return cls(tuple(dims))

    @property
    def d(self) -> int:
        return len(self.dims)

    @property
    def N(self) -> int:
        return reduce(mul, self.dims, 1)

    @property
    def full(self) -> "Rect":
        """The rectangle covering the whole lattice"""
        return Rect(tuple(1 for _ in self.dims), self.dims)

    def __str__(self) -> str:
        return "x".join(str(n) for n in self.dims)


@dataclass(frozen=True)
class Rect:
    """
    Axis-aligned discrete rectangle prod_i [lo_i, hi_i]

    Bounds are 1-based and inclusive.
    """
    lo: Tuple[int, ...]
    hi: Tuple[int, ...]

    def __post_init__(self):
        lo = tuple(int(a) for a in self.lo)
        hi = tuple(int(b) for b in self.hi)
        if len(lo) != len(hi) or not lo:
            raise ConfigurationError(f"rectangle bounds disagree in dimension: {lo} vs {hi}")
        if any(a < 1 or a > b for a, b in zip(lo, hi)):
            raise ConfigurationError(f"invalid rectangle bounds {lo}..{hi}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def interval(cls, a: int, b: int) -> "Rect":
        """1-d rectangle [a, b]"""
        return cls((a,), (b,))

    @property
    def d(self) -> int:
        return len(self.lo)

    @property
    def sides(self) -> Tuple[int, ...]:
        return tuple(b - a + 1 for a, b in zip(self.lo, self.hi))

    @property
    def size(self) -> int:
        return reduce(mul, self.sides, 1)

    @property
    def length(self) -> int:
        """Sum of the side lengths; the bottom-up visiting order key"""
        return sum(self.sides)

    def slices(self) -> Tuple[slice, ...]:
        """0-based numpy index for the cells of this rectangle"""
        return tuple(slice(a - 1, b) for a, b in zip(self.lo, self.hi))

    def within(self, shape: LatticeShape) -> bool:
        return self.d == shape.d and all(b <= n for b, n in zip(self.hi, shape.dims))

    def replace_side(self, dim: int, a: int, b: int) -> "Rect":
        """Copy with the interval of 0-based dimension ``dim`` replaced by [a, b]"""
        lo = list(self.lo)
        hi = list(self.hi)
        lo[dim] = a
        hi[dim] = b
        return Rect(tuple(lo), tuple(hi))

    def __str__(self) -> str:
        return "x".join(f"[{a},{b}]" for a, b in zip(self.lo, self.hi))
