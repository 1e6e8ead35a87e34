"""
Partition entity: a split tree over the lattice with rectangular leaves
"""
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Tuple

import numpy as np

from src.domain.entities.rect import LatticeShape, Rect


@dataclass(frozen=True)
class SplitNode:
    """
    One node of a split tree

    ``dim`` is the 1-based split dimension, None for a leaf.
    """
    rect: Rect
    dim: Optional[int] = None
    children: Tuple["SplitNode", ...] = ()

    @property
    def is_leaf(self) -> bool:
        return self.dim is None

    def leaves(self) -> Iterator[Rect]:
        stack = [self]
        while stack:
            node = stack.pop()
            if node.is_leaf:
                yield node.rect
            else:
                stack.extend(reversed(node.children))

    def depth(self) -> int:
        if self.is_leaf:
            return 0
        return 1 + max(child.depth() for child in self.children)


@dataclass(frozen=True)
class Partition:
    """Leaves of a recursive (dyadic or hierarchical) partition plus its split tree"""
    shape: LatticeShape
    root: SplitNode
    leaves: List[Rect] = field(default_factory=list)

    @classmethod
    def from_tree(cls, shape: LatticeShape, root: SplitNode) -> "Partition":
        return cls(shape=shape, root=root, leaves=list(root.leaves()))

    @classmethod
    def trivial(cls, shape: LatticeShape) -> "Partition":
        return cls.from_tree(shape, SplitNode(shape.full))

    def __len__(self) -> int:
        return len(self.leaves)

    @property
    def depth(self) -> int:
        return self.root.depth()

    def labels(self) -> np.ndarray:
        """Array over the lattice holding the index of each cell's leaf"""
        labels = np.full(self.shape.dims, -1, dtype=np.int64)
        for position, leaf in enumerate(self.leaves):
            labels[leaf.slices()] = position
        return labels

    def min_leaf_size(self) -> int:
        return min(leaf.size for leaf in self.leaves)
