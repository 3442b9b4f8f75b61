from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, NonNegativeInt, PositiveInt, model_validator

from cobweb_lab.models.matrix import BoolMatrix

# (r1, r2, c1, c2) with r1 < r2 and c1 < c2
Witness = Tuple[int, int, int, int]
Arc = Tuple[int, int]


class FerrersReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    is_dim1: bool
    witness: Optional[Witness] = None
    dimension: Optional[PositiveInt] = None
    completion_arcs: Optional[Tuple[Arc, ...]] = None

    @model_validator(mode="after")
    def check_witness_consistency(self):
        if self.is_dim1 == (self.witness is not None):
            raise ValueError("a witness is present exactly when the relation is not Ferrers")
        if self.is_dim1 and self.dimension is not None and self.dimension != 1:
            raise ValueError("a Ferrers relation has dimension 1")
        return self


class FerrersCompletion(BaseModel):
    """Smallest set of added arcs turning a relation into a Ferrers relation."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    count: NonNegativeInt
    arcs: Tuple[Arc, ...]
    completed: BoolMatrix
