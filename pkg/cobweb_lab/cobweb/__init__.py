from cobweb_lab.cobweb.chain import (
    adjacency_matrix,
    biadjacency_diag,
    chain_from_blocks,
    complete_chain,
    covers,
    delete_arcs,
    dibiclique,
    hasse_matrix,
    is_cobweb,
    is_complete,
    leq,
    level_of,
    natural_join,
    strict_order_matrix,
    vertex_at,
    zeta_matrix,
)
from cobweb_lab.cobweb.dot import to_dot

__all__ = [
    "adjacency_matrix",
    "biadjacency_diag",
    "chain_from_blocks",
    "complete_chain",
    "covers",
    "delete_arcs",
    "dibiclique",
    "hasse_matrix",
    "is_cobweb",
    "is_complete",
    "leq",
    "level_of",
    "natural_join",
    "strict_order_matrix",
    "to_dot",
    "vertex_at",
    "zeta_matrix",
]
