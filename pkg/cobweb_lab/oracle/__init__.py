from cobweb_lab.oracle.partitions import (
    enum_complete_cobwebs,
    enum_ordered_partitions,
    enum_ordered_partitions_of_type,
    iter_ordered_partitions,
    iter_ordered_partitions_of_type,
)
from cobweb_lab.oracle.relations import (
    BLOCK_CHECKS,
    enum_graded_chains,
    enum_graded_total,
    enum_nonempty_subsets_of_product,
    enum_surjections,
    iter_graded_chains,
)
from cobweb_lab.oracle.verify import VerificationSuite

__all__ = [
    "BLOCK_CHECKS",
    "VerificationSuite",
    "enum_complete_cobwebs",
    "enum_graded_chains",
    "enum_graded_total",
    "enum_nonempty_subsets_of_product",
    "enum_ordered_partitions",
    "enum_ordered_partitions_of_type",
    "enum_surjections",
    "iter_graded_chains",
    "iter_ordered_partitions",
    "iter_ordered_partitions_of_type",
]
