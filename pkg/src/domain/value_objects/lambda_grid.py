"""
Value objects for penalty grids and BIC scores
"""
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Tuple

from src.domain.exceptions import ConfigurationError, UsageError


class GridProvenance(Enum):
    """Where a lambda grid comes from"""
    GRID_1D = "grid1d"
    GRID_2D = "grid2d"
    QTVD_STYLE = "gridqtvd-style"
    BIC_1D = "grid-bic1d"
    CUSTOM = "custom"


class DfMode(Enum):
    """Degrees-of-freedom estimate used by the quantile BIC"""
    JUMP_COUNT = "jump"
    LEAF_COUNT = "leaf"

    @classmethod
    def parse(cls, name) -> "DfMode":
        if isinstance(name, cls):
            return name
        aliases = {"jump": cls.JUMP_COUNT, "jump-count": cls.JUMP_COUNT,
                   "leaf": cls.LEAF_COUNT, "leaf-count": cls.LEAF_COUNT}
        try:
            return aliases[str(name).strip().lower()]
        except KeyError:
            raise UsageError(f"unknown degrees-of-freedom mode '{name}' (expected jump or leaf)") from None


@dataclass(frozen=True)
class LambdaGrid:
    """Strictly increasing positive penalty values"""
    values: Tuple[float, ...]
    provenance: GridProvenance = GridProvenance.CUSTOM

    def __post_init__(self):
        values = tuple(float(v) for v in self.values)
        if not values:
            raise UsageError("a lambda grid needs at least one value")
        if any(not v > 0.0 or v == float("inf") for v in values):
            raise ConfigurationError(f"lambda values must be positive and finite, got {values}")
        if any(b <= a for a, b in zip(values, values[1:])):
            raise ConfigurationError("lambda grid values must be strictly increasing")
        object.__setattr__(self, "values", values)

    @classmethod
    def custom(cls, values: Iterable[float]) -> "LambdaGrid":
        """Grid from arbitrary values; sorted, duplicates rejected"""
        return cls(tuple(sorted(float(v) for v in values)), GridProvenance.CUSTOM)

    def __iter__(self) -> Iterator[float]:
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __contains__(self, lam) -> bool:
        return float(lam) in self.values


@dataclass(frozen=True)
class BicScore:
    """Quantile BIC of one fit: (2 / sigma) * loss + v * log(N)"""
    lam: float
    bic: float
    v: int
    loss: float
