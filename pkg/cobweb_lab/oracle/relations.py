"""
Brute-force counts of relations, surjections and graded relation chains.

The graded-chain counts are experimental: the number of all k-level graded
posets is an open question, so three readings are counted side by side.
"""

from itertools import product
from typing import Callable, Dict, Iterator, List, Sequence, Tuple, Union

from cobweb_lab.constants import (
    GRADED_CHAINS_MAX_CELLS,
    PRODUCT_SUBSETS_MAX_CELLS,
    SURJECTIONS_MAX_MAPS,
)
from cobweb_lab.counting import compositions
from cobweb_lab.ferrers import masks_nested
from cobweb_lab.models.counting import BigCount, CompositionType
from cobweb_lab.models.custom_errors import ArgumentError, FeasibilityError
from cobweb_lab.models.matrix import BoolMatrix
from cobweb_lab.models.oracle import ChainConstraint, EnumMethod, GradedRelationChain
from cobweb_lab.utils.logger import get_logger

logger = get_logger(__name__)

TypeLike = Union[CompositionType, Tuple[int, ...]]
BlockCheck = Callable[[Sequence[int], int], bool]


def _as_type(t: TypeLike) -> CompositionType:
    return t if isinstance(t, CompositionType) else CompositionType(parts=tuple(t))


# non-empty subsets of V_1 x ... x V_k


def _subsets_recursive(cells: int, index: int = 0, taken: bool = False) -> BigCount:
    if index == cells:
        return 1 if taken else 0
    return _subsets_recursive(cells, index + 1, taken) + _subsets_recursive(
        cells, index + 1, True
    )


def enum_nonempty_subsets_of_product(
    t: TypeLike, method: EnumMethod = EnumMethod.recursive
) -> BigCount:
    t = _as_type(t)
    if t.product > PRODUCT_SUBSETS_MAX_CELLS:
        raise FeasibilityError(
            f"product of type {t} has {t.product} tuples, limit is {PRODUCT_SUBSETS_MAX_CELLS}"
        )
    tuples = list(product(*(range(f) for f in t.parts)))
    if method == EnumMethod.recursive:
        return _subsets_recursive(len(tuples))
    count = 0
    for mask in range(1 << len(tuples)):
        subset = [tuples[b] for b in range(len(tuples)) if mask >> b & 1]
        if subset:
            count += 1
    return count


# surjections {0..n-1} -> {0..k-1}


def _surjections_recursive(n: int, k: int, index: int = 0, hit: int = 0) -> BigCount:
    if index == n:
        return 1 if hit == (1 << k) - 1 else 0
    # prune when the unassigned elements cannot reach the missing targets
    if (k - hit.bit_count()) > n - index:
        return 0
    return sum(_surjections_recursive(n, k, index + 1, hit | (1 << target)) for target in range(k))


def enum_surjections(n: int, k: int, method: EnumMethod = EnumMethod.recursive) -> BigCount:
    if n < 1 or k < 1:
        raise ArgumentError(f"enum_surjections needs positive arguments, got ({n}, {k})")
    if k**n > SURJECTIONS_MAX_MAPS:
        raise FeasibilityError(f"{k}^{n} maps exceed the limit of {SURJECTIONS_MAX_MAPS}")
    if method == EnumMethod.recursive:
        return _surjections_recursive(n, k)
    return sum(1 for images in product(range(k), repeat=n) if len(set(images)) == k)


# graded relation chains


def _rows_of(mask: int, rows: int, cols: int) -> List[int]:
    full = (1 << cols) - 1
    return [(mask >> (r * cols)) & full for r in range(rows)]


def _any_block(row_masks: Sequence[int], cols: int) -> bool:
    return True


def _no_empty_row_col(row_masks: Sequence[int], cols: int) -> bool:
    union = 0
    for mask in row_masks:
        if mask == 0:
            return False
        union |= mask
    return union == (1 << cols) - 1


def _ferrers_block(row_masks: Sequence[int], cols: int) -> bool:
    return masks_nested(row_masks)


# A vertex of a non-top level needs an out-arc (no empty row in the block
# above it) and a vertex of a non-bottom level an in-arc (no empty column in
# the block below it), so every profile is a per-block condition.
BLOCK_CHECKS: Dict[ChainConstraint, BlockCheck] = {
    ChainConstraint.all_blocks: _any_block,
    ChainConstraint.no_empty_row_col: _no_empty_row_col,
    ChainConstraint.ferrers_blocks: _ferrers_block,
}


def _check_cells(t: CompositionType):
    if t.adjacent_cells > GRADED_CHAINS_MAX_CELLS:
        raise FeasibilityError(
            f"type {t} has {t.adjacent_cells} block cells, limit is {GRADED_CHAINS_MAX_CELLS}"
        )


def _shapes(t: CompositionType) -> List[Tuple[int, int]]:
    return list(zip(t.parts, t.parts[1:]))


def _chains_recursive(
    shapes: Sequence[Tuple[int, int]], check: BlockCheck, index: int = 0
) -> Iterator[Tuple[int, ...]]:
    if index == len(shapes):
        yield ()
        return
    rows, cols = shapes[index]
    for mask in range(1 << (rows * cols)):
        if check(_rows_of(mask, rows, cols), cols):
            for tail in _chains_recursive(shapes, check, index + 1):
                yield (mask,) + tail


def _chains_iterative(shapes: Sequence[Tuple[int, int]], check: BlockCheck) -> BigCount:
    sizes = [rows * cols for rows, cols in shapes]
    count = 0
    for whole in range(1 << sum(sizes)):
        offset, ok = 0, True
        for (rows, cols), size in zip(shapes, sizes):
            mask = (whole >> offset) & ((1 << size) - 1)
            offset += size
            if not check(_rows_of(mask, rows, cols), cols):
                ok = False
                break
        count += ok
    return count


def iter_graded_chains(t: TypeLike, constraint: ChainConstraint) -> Iterator[GradedRelationChain]:
    t = _as_type(t)
    _check_cells(t)
    shapes = _shapes(t)
    for masks in _chains_recursive(shapes, BLOCK_CHECKS[constraint]):
        blocks = tuple(
            BoolMatrix.from_row_masks(_rows_of(mask, rows, cols), cols)
            for mask, (rows, cols) in zip(masks, shapes)
        )
        yield GradedRelationChain(type=t, blocks=blocks)


def enum_graded_chains(
    t: TypeLike,
    constraint: ChainConstraint,
    method: EnumMethod = EnumMethod.recursive,
) -> BigCount:
    """Experimental: level-relation chains of type t satisfying the constraint."""
    t = _as_type(t)
    _check_cells(t)
    check = BLOCK_CHECKS[constraint]
    if method == EnumMethod.recursive:
        count = sum(1 for _ in _chains_recursive(_shapes(t), check))
    else:
        count = _chains_iterative(_shapes(t), check)
    logger.debug("graded chains of type %s (%s): %d", t, constraint.value, count)
    return count


def enum_graded_total(n: int, constraint: ChainConstraint) -> BigCount:
    """Experimental: the per-type counts summed over every composition of n."""
    return sum(enum_graded_chains(t, constraint) for t in compositions(n))
