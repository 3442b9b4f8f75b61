from enum import Enum
from typing import Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from cobweb_lab.models.chain import CobwebChain, LevelSequence
from cobweb_lab.models.counting import CompositionType
from cobweb_lab.models.matrix import BoolMatrix


class EnumMethod(str, Enum):
    recursive = "recursive"
    iterative = "iterative"


class ChainConstraint(str, Enum):
    """Readings of "k-level graded poset" used by the experimental counts."""

    all_blocks = "all-blocks"
    no_empty_row_col = "no-empty-row-col"
    ferrers_blocks = "ferrers-blocks"


class OrderedPartition(BaseModel):
    """Ordered list of disjoint non-empty blocks covering {0..N-1}."""

    model_config = ConfigDict(frozen=True)

    blocks: Tuple[Tuple[int, ...], ...]

    @model_validator(mode="after")
    def check_partition(self):
        seen = [e for block in self.blocks for e in block]
        if any(len(block) == 0 for block in self.blocks):
            raise ValueError("ordered partition blocks must be non-empty")
        if len(seen) != len(set(seen)):
            raise ValueError("ordered partition blocks must be disjoint")
        if sorted(seen) != list(range(len(seen))):
            raise ValueError("ordered partition must cover 0..N-1")
        return self

    @property
    def n(self) -> int:
        return sum(len(block) for block in self.blocks)

    @property
    def type(self) -> CompositionType:
        return CompositionType(parts=tuple(len(block) for block in self.blocks))

    def __str__(self) -> str:
        return " | ".join(" ".join(str(e) for e in block) for block in self.blocks)


class GradedRelationChain(BaseModel):
    """
    Level relations of a graded structure of the given type: same shape as a
    cobweb chain, but the blocks are arbitrary.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    type: CompositionType
    blocks: Tuple[BoolMatrix, ...] = ()

    @model_validator(mode="after")
    def check_block_chaining(self):
        parts = self.type.parts
        if len(self.blocks) != len(parts) - 1:
            raise ValueError(f"type {self.type} needs {len(parts) - 1} block(s)")
        for i, block in enumerate(self.blocks):
            if block.shape != (parts[i], parts[i + 1]):
                raise ValueError(f"block {i} must be {parts[i]}x{parts[i + 1]}")
        return self

    def to_chain(self) -> CobwebChain:
        return CobwebChain(levels=LevelSequence(sizes=self.type.parts), blocks=self.blocks)
