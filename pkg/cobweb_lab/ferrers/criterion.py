"""
Ferrers dimension 1 test: a 0/1 matrix is a Ferrers relation iff no two rows
and two columns induce one of the 2x2 permutation matrices, equivalently iff
its row supports form a chain under inclusion.
"""

from itertools import combinations
from typing import Sequence

from cobweb_lab.models.ferrers import FerrersReport
from cobweb_lab.models.matrix import BoolMatrix


def _lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def masks_nested(masks: Sequence[int]) -> bool:
    """Row bitmasks form a chain under inclusion."""
    ordered = sorted(masks, key=int.bit_count)
    return all(lo & ~hi == 0 for lo, hi in zip(ordered, ordered[1:]))


def ferrers_by_scan(b: BoolMatrix) -> FerrersReport:
    """
    Exhaustive quadruple scan; the witness is the first forbidden quadruple in
    lexicographic order of (r1, r2, c1, c2).
    """
    rows = b.to_rows()
    for r1, r2 in combinations(range(b.rows), 2):
        top, bottom = rows[r1], rows[r2]
        for c1, c2 in combinations(range(b.cols), 2):
            a, x, y, d = top[c1], top[c2], bottom[c1], bottom[c2]
            if a == d and x == y and a != x:
                return FerrersReport(is_dim1=False, witness=(r1, r2, c1, c2))
    return FerrersReport(is_dim1=True)


def ferrers_by_nested_supports(b: BoolMatrix) -> FerrersReport:
    """
    Sort rows by support size and check consecutive inclusions. When a pair
    fails, the smaller row has a column the larger lacks and vice versa, which
    yields a witness.
    """
    masks = b.row_masks()
    order = sorted(range(b.rows), key=lambda r: masks[r].bit_count())
    for lo, hi in zip(order, order[1:]):
        only_lo = masks[lo] & ~masks[hi]
        if only_lo:
            only_hi = masks[hi] & ~masks[lo]
            r1, r2 = sorted((lo, hi))
            c1, c2 = sorted((_lowest_bit(only_lo), _lowest_bit(only_hi)))
            return FerrersReport(is_dim1=False, witness=(r1, r2, c1, c2))
    return FerrersReport(is_dim1=True)


def is_ferrers_dim1(b: BoolMatrix) -> FerrersReport:
    """
    Decide Ferrers dimension 1. The decision comes from the nested-support
    check; a failing matrix is rescanned so the reported witness is the
    lexicographically first one.
    """
    if ferrers_by_nested_supports(b).is_dim1:
        return FerrersReport(is_dim1=True, dimension=1)
    return ferrers_by_scan(b)
