from cobweb_lab.counting.compositions import Compositions, compositions
from cobweb_lab.counting.formulas import (
    complete_cobwebs_total,
    fubini,
    multinomial,
    relations_of_type,
    relations_total,
    stirling2,
    surjection_count,
    surjection_count_inclusion_exclusion,
    tuples_of_type,
)

__all__ = [
    "Compositions",
    "complete_cobwebs_total",
    "compositions",
    "fubini",
    "multinomial",
    "relations_of_type",
    "relations_total",
    "stirling2",
    "surjection_count",
    "surjection_count_inclusion_exclusion",
    "tuples_of_type",
]
