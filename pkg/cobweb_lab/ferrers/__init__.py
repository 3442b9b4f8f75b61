from cobweb_lab.ferrers.criterion import (
    ferrers_by_nested_supports,
    ferrers_by_scan,
    is_ferrers_dim1,
    masks_nested,
)
from cobweb_lab.ferrers.search import (
    ferrers_dimension,
    maximal_ferrers_covers,
    min_completion_to_ferrers,
)

__all__ = [
    "ferrers_by_nested_supports",
    "ferrers_by_scan",
    "ferrers_dimension",
    "is_ferrers_dim1",
    "masks_nested",
    "maximal_ferrers_covers",
    "min_completion_to_ferrers",
]
