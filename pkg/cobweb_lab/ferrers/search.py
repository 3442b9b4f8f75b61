"""
Brute-force searches over Ferrers supersets of a relation: its Ferrers
dimension and its minimal completion to a Ferrers relation.
"""

from itertools import combinations
from typing import List, Optional

from cobweb_lab.constants import FERRERS_DIMENSION_MAX_CELLS, MIN_COMPLETION_MAX_CELLS
from cobweb_lab.ferrers.criterion import masks_nested
from cobweb_lab.models.custom_errors import ArgumentError, FeasibilityError
from cobweb_lab.models.ferrers import FerrersCompletion
from cobweb_lab.models.matrix import BoolMatrix
from cobweb_lab.utils.logger import get_logger

logger = get_logger(__name__)


def _check_cells(b: BoolMatrix, bound: int, op: str):
    cells = b.rows * b.cols
    if cells > bound:
        raise FeasibilityError(f"{op} is limited to {bound} cells, got {b.rows}x{b.cols}={cells}")


def maximal_ferrers_covers(b: BoolMatrix) -> List[int]:
    """
    For every Ferrers superset S of b, the set of zeros of b that S keeps at 0,
    as a bitmask over b.zero_positions(). Only inclusion-maximal sets are
    returned; an intersection of supersets equals b iff their kept-zero sets
    cover every zero of b.
    """
    zeros = b.zero_positions()
    base = b.row_masks()
    covers = []
    for added in range(1 << len(zeros)):
        masks = list(base)
        for t, (i, j) in enumerate(zeros):
            if added >> t & 1:
                masks[i] |= 1 << j
        if masks_nested(masks):
            covers.append(((1 << len(zeros)) - 1) & ~added)
    maximal = [
        cov for cov in covers if not any(other != cov and cov & ~other == 0 for other in covers)
    ]
    logger.debug(
        "%d Ferrers superset(s) over %d zero(s), %d maximal", len(covers), len(zeros), len(maximal)
    )
    return sorted(set(maximal))


def ferrers_dimension(b: BoolMatrix, max_d: int) -> Optional[int]:
    """
    Least d <= max_d such that b is the intersection of d Ferrers relations
    containing it, or None when more than max_d are needed.
    """
    if max_d < 1:
        raise ArgumentError(f"max_d must be positive, got {max_d}")
    _check_cells(b, FERRERS_DIMENSION_MAX_CELLS, "ferrers_dimension")
    if masks_nested(b.row_masks()):
        return 1
    full = (1 << len(b.zero_positions())) - 1
    covers = maximal_ferrers_covers(b)
    for d in range(2, max_d + 1):
        for group in combinations(covers, d):
            union = 0
            for cov in group:
                union |= cov
            if union == full:
                return d
    return None


def min_completion_to_ferrers(b: BoolMatrix) -> FerrersCompletion:
    """
    Fewest arcs (zero entries flipped to 1) making b a Ferrers relation.
    Candidate sets are tried by increasing size and, within a size, in
    lexicographic row-major order, so ties resolve to the smallest arc set.
    """
    _check_cells(b, MIN_COMPLETION_MAX_CELLS, "min_completion_to_ferrers")
    zeros = b.zero_positions()
    base = b.row_masks()
    for size in range(len(zeros) + 1):
        for arcs in combinations(zeros, size):
            masks = list(base)
            for i, j in arcs:
                masks[i] |= 1 << j
            if masks_nested(masks):
                logger.debug("Ferrers completion found with %d arc(s)", size)
                return FerrersCompletion(
                    count=size, arcs=tuple(arcs), completed=b.with_entries(arcs, 1)
                )
    # filling every zero gives the all-ones matrix, which is always Ferrers
    raise AssertionError("unreachable: the all-ones completion is Ferrers")  # pragma: no cover
