"""
Boolean matrix algebra over ({0,1}, OR, AND).
"""

from typing import Sequence

import numpy as np

from cobweb_lab.models.custom_errors import ArgumentError, ShapeError
from cobweb_lab.models.matrix import BoolMatrix
from cobweb_lab.utils.logger import get_logger

logger = get_logger(__name__)


def _require_square(a: BoolMatrix, op: str):
    if not a.is_square:
        raise ShapeError(f"{op} needs a square matrix, got {a.rows}x{a.cols}")


def bool_product(a: BoolMatrix, b: BoolMatrix) -> BoolMatrix:
    """result[i][j] = 1 iff some t has a[i][t] = b[t][j] = 1."""
    if a.cols != b.rows:
        raise ShapeError(
            f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}: inner sizes differ"
        )
    # integer product counts witnesses; any positive count is a 1
    counts = a.data.astype(np.int64) @ b.data.astype(np.int64)
    return BoolMatrix(counts > 0)


def bool_power(a: BoolMatrix, k: int) -> BoolMatrix:
    """k-th Boolean power; the 0-th power is the identity."""
    _require_square(a, "bool_power")
    if k < 0:
        raise ArgumentError(f"power must be non-negative, got {k}")
    result = BoolMatrix.identity(a.rows)
    for _ in range(k):
        result = bool_product(result, a)
    return result


def direct_sum(blocks: Sequence[BoolMatrix]) -> BoolMatrix:
    """Block-diagonal matrix diag(B_1, ..., B_n), zeros off the blocks."""
    if len(blocks) == 0:
        raise ArgumentError("direct_sum needs at least one block")
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    data = np.zeros((rows, cols), dtype=bool)
    r0 = c0 = 0
    for block in blocks:
        data[r0 : r0 + block.rows, c0 : c0 + block.cols] = block.data
        r0 += block.rows
        c0 += block.cols
    return BoolMatrix(data)


def digraph_adjacency(b: BoolMatrix) -> BoolMatrix:
    """Adjacency [[0, B], [0, 0]] of the bipartite digraph coded by B."""
    n = b.rows + b.cols
    data = np.zeros((n, n), dtype=bool)
    data[: b.rows, b.rows :] = b.data
    return BoolMatrix(data)


def bipartite_adjacency(b: BoolMatrix) -> BoolMatrix:
    """Symmetric adjacency [[0, B], [B^T, 0]] of the undirected bipartite graph."""
    n = b.rows + b.cols
    data = np.zeros((n, n), dtype=bool)
    data[: b.rows, b.rows :] = b.data
    data[b.rows :, : b.rows] = b.data.T
    return BoolMatrix(data)


def boolean_geometric_series(a: BoolMatrix) -> BoolMatrix:
    """
    Sum I + a + a^2 + ... in the Boolean semiring, i.e. (1 - a)^(-1) read
    Boolean-wise. The accumulation is stopped at the first step that does not
    change it; on n vertices this happens within n steps.

    The result is the reflexive-transitive closure of the relation coded by a.
    """
    _require_square(a, "boolean_geometric_series")
    acc = BoolMatrix.identity(a.rows)
    power = acc
    steps = 0
    for steps in range(1, a.rows + 1):
        power = bool_product(power, a)
        nxt = acc | power
        if nxt == acc:
            break
        acc = nxt
    logger.debug("geometric series on %dx%d settled after %d step(s)", a.rows, a.rows, steps)
    return acc


def warshall_closure(a: BoolMatrix) -> BoolMatrix:
    """Reflexive-transitive closure by Warshall's triple loop."""
    _require_square(a, "warshall_closure")
    n = a.rows
    reach = [[bool(a.data[i, j]) or i == j for j in range(n)] for i in range(n)]
    for k in range(n):
        row_k = reach[k]
        for i in range(n):
            if reach[i][k]:
                row_i = reach[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    return BoolMatrix(reach)
