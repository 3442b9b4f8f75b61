import math
from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, PositiveInt

from cobweb_lab.models.custom_errors import ArgumentError

# Counts are exact Python integers of arbitrary size.
BigCount = int


class CompositionType(BaseModel):
    """Ordered tuple <f_1, ..., f_k> of positive parts; composes N = sum of parts."""

    model_config = ConfigDict(frozen=True)

    parts: Tuple[PositiveInt, ...] = Field(min_length=1)

    @classmethod
    def of(cls, *parts: int) -> "CompositionType":
        return cls(parts=tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "CompositionType":
        try:
            parts = tuple(int(p) for p in text.split(","))
        except ValueError:
            raise ArgumentError(f"invalid composition type '{text}': expected e.g. 2,3")
        return cls(parts=parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def product(self) -> int:
        return math.prod(self.parts)

    @property
    def adjacent_cells(self) -> int:
        """Sum of f_i * f_{i+1}: cells in the blocks between consecutive levels."""
        return sum(a * b for a, b in zip(self.parts, self.parts[1:]))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)
