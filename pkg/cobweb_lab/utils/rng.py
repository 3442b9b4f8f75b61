from typing import List, Optional

import numpy as np

from cobweb_lab.models.chain import CobwebChain, LevelSequence
from cobweb_lab.models.matrix import BoolMatrix, RealMatrix


class RNG:
    """Seeded source of random matrices and chains for the verification suite."""

    def __init__(self, seed: Optional[int] = None):
        self.seed = seed
        self.rng = np.random.default_rng(seed=seed)

    def random(self) -> float:
        return float(self.rng.random())

    def randint(self, low: int, high: int) -> int:
        """Return a random integer N such that low <= N <= high (both inclusive)."""
        if low == high:
            return low
        return int(self.rng.integers(low, high + 1))

    def bool_matrix(self, rows: int, cols: int, density: float = 0.5) -> BoolMatrix:
        return BoolMatrix(self.rng.random((rows, cols)) < density)

    def dag_matrix(self, n: int, density: float = 0.5) -> BoolMatrix:
        """Strictly upper-triangular 0/1 matrix: the adjacency of a random DAG."""
        data = np.triu(self.rng.random((n, n)) < density, k=1)
        return BoolMatrix(data)

    def real_matrix(
        self, rows: int, cols: int, low: float = -1.0, high: float = 1.0
    ) -> RealMatrix:
        return RealMatrix(self.rng.uniform(low, high, size=(rows, cols)))

    def level_sequence(
        self,
        max_levels: int,
        max_size: int,
        min_levels: int = 1,
        first_size: Optional[int] = None,
    ) -> LevelSequence:
        k = self.randint(min_levels, max_levels)
        sizes: List[int] = [self.randint(1, max_size) for _ in range(k)]
        if first_size is not None:
            sizes[0] = first_size
        return LevelSequence(sizes=tuple(sizes))

    def chain(
        self,
        max_levels: int,
        max_size: int,
        min_levels: int = 1,
        first_size: Optional[int] = None,
        density: float = 0.5,
    ) -> CobwebChain:
        """Chain with random level sizes and random (not necessarily Ferrers) blocks."""
        levels = self.level_sequence(max_levels, max_size, min_levels, first_size)
        sizes = levels.sizes
        blocks = tuple(
            self.bool_matrix(sizes[i], sizes[i + 1], density) for i in range(levels.k - 1)
        )
        return CobwebChain(levels=levels, blocks=blocks)
