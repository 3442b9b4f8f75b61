"""
Construction and interrogation of cobweb chains.

A chain D is the natural join of bipartite digraphs between consecutive
levels; its Hasse adjacency carries block i at level-block position
(i, i+1), and its zeta matrix is the Boolean geometric series of that
adjacency.
"""

from typing import Iterable, Sequence, Tuple, Union

import numpy as np

from cobweb_lab.ferrers import is_ferrers_dim1
from cobweb_lab.matrix_core import boolean_geometric_series, direct_sum
from cobweb_lab.models.chain import CobwebChain, LevelSequence, VertexId
from cobweb_lab.models.custom_errors import (
    ArgumentError,
    BoundsError,
    JoinConditionError,
    ShapeError,
)
from cobweb_lab.models.matrix import BoolMatrix, Position
from cobweb_lab.utils.logger import get_logger

logger = get_logger(__name__)

VertexLike = Union[VertexId, int]


def _levels(f: Union[LevelSequence, Sequence[int]]) -> LevelSequence:
    if isinstance(f, LevelSequence):
        return f
    return LevelSequence(sizes=tuple(f))


def chain_from_blocks(
    f: Union[LevelSequence, Sequence[int]], blocks: Sequence[BoolMatrix]
) -> CobwebChain:
    levels = _levels(f)
    if len(blocks) != levels.k - 1:
        raise ShapeError(f"{levels.k} level(s) need {levels.k - 1} block(s), got {len(blocks)}")
    for i, block in enumerate(blocks):
        expected = (levels.sizes[i], levels.sizes[i + 1])
        if block.shape != expected:
            raise ShapeError(
                f"block {i} must be {expected[0]}x{expected[1]}, got {block.rows}x{block.cols}"
            )
    return CobwebChain(levels=levels, blocks=tuple(blocks))


def dibiclique(p: int, l: int) -> CobwebChain:
    """Two-level chain whose only block is the all-ones p x l matrix."""
    if p < 1 or l < 1:
        raise ArgumentError(f"di-biclique sizes must be positive, got ({p}, {l})")
    return chain_from_blocks((p, l), [BoolMatrix.ones(p, l)])


def complete_chain(f: Union[LevelSequence, Sequence[int]]) -> CobwebChain:
    levels = _levels(f)
    sizes = levels.sizes
    blocks = [BoolMatrix.ones(sizes[i], sizes[i + 1]) for i in range(levels.k - 1)]
    return CobwebChain(levels=levels, blocks=tuple(blocks))


def delete_arcs(c: CobwebChain, block_index: int, arcs: Iterable[Position]) -> CobwebChain:
    if not 0 <= block_index < len(c.blocks):
        raise BoundsError(f"block index {block_index} outside 0..{len(c.blocks) - 1}")
    blocks = list(c.blocks)
    blocks[block_index] = blocks[block_index].with_entries(arcs, 0)
    return CobwebChain(levels=c.levels, blocks=tuple(blocks))


def natural_join(c1: CobwebChain, c2: CobwebChain) -> CobwebChain:
    """
    Glue c2 on top of c1 along c1's last level, which is identified
    position-by-position with c2's first level. Not commutative.
    """
    shared_low, shared_high = c1.levels.sizes[-1], c2.levels.sizes[0]
    if shared_low != shared_high:
        raise JoinConditionError(
            f"last level of the first chain has {shared_low} vertices, "
            f"first level of the second has {shared_high}"
        )
    levels = LevelSequence(sizes=c1.levels.sizes + c2.levels.sizes[1:])
    return CobwebChain(levels=levels, blocks=c1.blocks + c2.blocks)


def adjacency_matrix(c: CobwebChain) -> BoolMatrix:
    """N x N Hasse adjacency; block (r, r+1) in level coordinates is blocks[r]."""
    offsets = c.levels.offsets
    data = np.zeros((c.n, c.n), dtype=bool)
    for r, block in enumerate(c.blocks):
        r0, c0 = offsets[r], offsets[r + 1]
        data[r0 : r0 + block.rows, c0 : c0 + block.cols] = block.data
    return BoolMatrix(data)


def hasse_matrix(f: Union[LevelSequence, Sequence[int]]) -> BoolMatrix:
    """A_F: Hasse adjacency of the complete cobweb with level sizes f."""
    return adjacency_matrix(complete_chain(f))


def biadjacency_diag(c: CobwebChain) -> BoolMatrix:
    """diag(B_1, ..., B_{k-1}); undefined for a single-level chain."""
    if not c.blocks:
        raise ArgumentError("a single-level chain has no biadjacency blocks")
    return direct_sum(c.blocks)


def zeta_matrix(c: CobwebChain) -> BoolMatrix:
    return boolean_geometric_series(adjacency_matrix(c))


def strict_order_matrix(c: CobwebChain) -> BoolMatrix:
    zeta = zeta_matrix(c).data.copy()
    np.fill_diagonal(zeta, False)
    return BoolMatrix(zeta)


def _index(c: CobwebChain, v: VertexLike) -> int:
    index = v.index if isinstance(v, VertexId) else int(v)
    if not 0 <= index < c.n:
        raise BoundsError(f"vertex {index} outside 0..{c.n - 1}")
    return index


def level_of(c: CobwebChain, v: VertexLike) -> Tuple[int, int]:
    """(level, position within level) of a global vertex id."""
    index = _index(c, v)
    for level, start in enumerate(c.levels.offsets):
        if index < start + c.levels.sizes[level]:
            return level, index - start
    raise BoundsError(f"vertex {index} outside 0..{c.n - 1}")  # pragma: no cover


def vertex_at(c: CobwebChain, level: int, position: int) -> VertexId:
    span = c.levels.level_range(level)
    if not 0 <= position < len(span):
        raise BoundsError(f"position {position} outside level {level} of size {len(span)}")
    return VertexId(index=span.start + position)


def leq(c: CobwebChain, u: VertexLike, v: VertexLike) -> bool:
    """u <= v in the poset associated with the chain."""
    i, j = _index(c, u), _index(c, v)
    return bool(zeta_matrix(c)[i, j])


def covers(c: CobwebChain, u: VertexLike, v: VertexLike) -> bool:
    """v covers u, i.e. there is an arc u -> v in the Hasse digraph."""
    (lu, pu), (lv, pv) = level_of(c, u), level_of(c, v)
    return lv == lu + 1 and bool(c.blocks[lu][pu, pv])


def is_complete(c: CobwebChain) -> bool:
    return all(block.is_all_ones() for block in c.blocks)


def is_cobweb(c: CobwebChain) -> bool:
    """Every block is a Ferrers dimension 1 relation."""
    return all(is_ferrers_dim1(block).is_dim1 for block in c.blocks)
