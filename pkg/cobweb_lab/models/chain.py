from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, PositiveInt, model_validator

from cobweb_lab.models.custom_errors import ArgumentError, BoundsError
from cobweb_lab.models.matrix import BoolMatrix


class LevelSequence(BaseModel):
    """
    Level sizes <f_1, ..., f_k> of a graded digraph. Level r occupies the
    contiguous global index range [f_1 + ... + f_{r-1}, f_1 + ... + f_r).
    Levels are numbered from 0 in code.
    """

    model_config = ConfigDict(frozen=True)

    sizes: Tuple[PositiveInt, ...] = Field(min_length=1)

    @classmethod
    def of(cls, *sizes: int) -> "LevelSequence":
        return cls(sizes=tuple(sizes))

    @classmethod
    def parse(cls, text: str) -> "LevelSequence":
        """Parse comma separated sizes such as "2,3,1"."""
        try:
            sizes = tuple(int(part) for part in text.split(","))
        except ValueError:
            raise ArgumentError(f"invalid level sequence '{text}': expected e.g. 2,3,1")
        return cls(sizes=sizes)

    @property
    def k(self) -> int:
        return len(self.sizes)

    @property
    def total(self) -> int:
        return sum(self.sizes)

    @property
    def offsets(self) -> List[int]:
        out, acc = [], 0
        for size in self.sizes:
            out.append(acc)
            acc += size
        return out

    def level_range(self, level: int) -> range:
        if not 0 <= level < self.k:
            raise BoundsError(f"level {level} outside 0..{self.k - 1}")
        start = self.offsets[level]
        return range(start, start + self.sizes[level])

    def __str__(self) -> str:
        return ",".join(str(s) for s in self.sizes)


class VertexId(BaseModel):
    model_config = ConfigDict(frozen=True)

    index: NonNegativeInt


class CobwebChain(BaseModel):
    """
    Graded digraph given by its levels and the k-1 biadjacency blocks between
    consecutive levels. Block i has shape f_i x f_{i+1}; a single-level chain
    (an antichain) has no blocks.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    levels: LevelSequence
    blocks: Tuple[BoolMatrix, ...] = ()

    @model_validator(mode="after")
    def check_block_chaining(self):
        sizes = self.levels.sizes
        if len(self.blocks) != len(sizes) - 1:
            raise ValueError(
                f"{len(sizes)} level(s) need {len(sizes) - 1} block(s), got {len(self.blocks)}"
            )
        for i, block in enumerate(self.blocks):
            if block.shape != (sizes[i], sizes[i + 1]):
                raise ValueError(
                    f"block {i} must be {sizes[i]}x{sizes[i + 1]}, got {block.rows}x{block.cols}"
                )
        return self

    @property
    def k(self) -> int:
        return self.levels.k

    @property
    def n(self) -> int:
        return self.levels.total

    def __hash__(self) -> int:
        return hash((self.levels.sizes, self.blocks))
