from cobweb_lab.matrix_core.boolean import (
    bipartite_adjacency,
    bool_power,
    bool_product,
    boolean_geometric_series,
    digraph_adjacency,
    direct_sum,
    warshall_closure,
)
from cobweb_lab.matrix_core.real import kronecker_product, kronecker_sum, real_exp

__all__ = [
    "bipartite_adjacency",
    "bool_power",
    "bool_product",
    "boolean_geometric_series",
    "digraph_adjacency",
    "direct_sum",
    "kronecker_product",
    "kronecker_sum",
    "real_exp",
    "warshall_closure",
]
