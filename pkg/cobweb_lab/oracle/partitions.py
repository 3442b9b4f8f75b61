"""
Brute-force enumeration of ordered set partitions and complete cobwebs.

Every enumerator has a recursive and an iterative implementation that share
no code, so a count can be confirmed by two routes before it is compared with
a closed formula.
"""

from itertools import combinations, permutations
from typing import Iterator, List, Optional, Set, Tuple, Union

from cobweb_lab.cobweb import complete_chain, strict_order_matrix
from cobweb_lab.constants import COMPLETE_COBWEBS_MAX_N, ORACLE_MAX_N
from cobweb_lab.models.counting import BigCount, CompositionType
from cobweb_lab.models.custom_errors import ArgumentError, FeasibilityError
from cobweb_lab.models.oracle import EnumMethod, OrderedPartition
from cobweb_lab.utils.logger import get_logger

logger = get_logger(__name__)

Blocks = Tuple[Tuple[int, ...], ...]
TypeLike = Union[CompositionType, Tuple[int, ...]]


def _as_type(t: TypeLike) -> CompositionType:
    return t if isinstance(t, CompositionType) else CompositionType(parts=tuple(t))


def _check_n(n: int, bound: int, op: str):
    if n < 1:
        raise ArgumentError(f"{op} needs a positive n, got {n}")
    if n > bound:
        raise FeasibilityError(f"{op} is limited to n <= {bound}, got {n}")


def _check_type(n: int, t: CompositionType):
    if t.total != n:
        raise ArgumentError(f"type {t} composes {t.total}, not {n}")


# ordered partitions, optionally with exactly k blocks


def _partitions_recursive(elements: Tuple[int, ...], k: Optional[int]) -> Iterator[Blocks]:
    if not elements:
        if k is None or k == 0:
            yield ()
        return
    if k is not None and (k == 0 or k > len(elements)):
        return
    rest_k = None if k is None else k - 1
    for size in range(1, len(elements) + 1):
        for first in combinations(elements, size):
            rest = tuple(e for e in elements if e not in first)
            for tail in _partitions_recursive(rest, rest_k):
                yield (first,) + tail


def _partitions_iterative(n: int, k: Optional[int]) -> List[Blocks]:
    # insert 0, 1, ..., n-1 one at a time: into an existing block or as a new
    # singleton block at any position
    current: List[Blocks] = [()]
    for e in range(n):
        remaining = n - e - 1
        grown: List[Blocks] = []
        for blocks in current:
            for i in range(len(blocks)):
                grown.append(blocks[:i] + (blocks[i] + (e,),) + blocks[i + 1 :])
            for pos in range(len(blocks) + 1):
                grown.append(blocks[:pos] + ((e,),) + blocks[pos:])
        if k is not None:
            grown = [b for b in grown if len(b) <= k and len(b) + remaining >= k]
        current = grown
    return current


def _check_k(k: Optional[int]):
    if k is not None and k < 1:
        raise ArgumentError(f"k must be positive, got {k}")


def iter_ordered_partitions(n: int, k: Optional[int] = None) -> Iterator[OrderedPartition]:
    _check_n(n, ORACLE_MAX_N, "enum_ordered_partitions")
    _check_k(k)
    blocks = _partitions_recursive(tuple(range(n)), k)
    return (OrderedPartition(blocks=b) for b in blocks)


def enum_ordered_partitions(
    n: int, k: Optional[int] = None, method: EnumMethod = EnumMethod.recursive
) -> BigCount:
    _check_n(n, ORACLE_MAX_N, "enum_ordered_partitions")
    _check_k(k)
    if method == EnumMethod.recursive:
        count = sum(1 for _ in _partitions_recursive(tuple(range(n)), k))
    else:
        count = len(_partitions_iterative(n, k))
    logger.debug("ordered partitions n=%d k=%s (%s): %d", n, k, method.value, count)
    return count


# ordered partitions whose i-th block has size f_i


def _typed_recursive(elements: Tuple[int, ...], parts: Tuple[int, ...]) -> Iterator[Blocks]:
    if not parts:
        if not elements:
            yield ()
        return
    for first in combinations(elements, parts[0]):
        rest = tuple(e for e in elements if e not in first)
        for tail in _typed_recursive(rest, parts[1:]):
            yield (first,) + tail


def _typed_iterative(n: int, parts: Tuple[int, ...]) -> Set[Blocks]:
    # cut every permutation into consecutive runs of the given sizes
    seen: Set[Blocks] = set()
    for perm in permutations(range(n)):
        blocks, start = [], 0
        for size in parts:
            blocks.append(tuple(sorted(perm[start : start + size])))
            start += size
        seen.add(tuple(blocks))
    return seen


def iter_ordered_partitions_of_type(n: int, t: TypeLike) -> Iterator[OrderedPartition]:
    t = _as_type(t)
    _check_n(n, ORACLE_MAX_N, "enum_ordered_partitions_of_type")
    _check_type(n, t)
    blocks = _typed_recursive(tuple(range(n)), t.parts)
    return (OrderedPartition(blocks=b) for b in blocks)


def enum_ordered_partitions_of_type(
    n: int, t: TypeLike, method: EnumMethod = EnumMethod.recursive
) -> BigCount:
    t = _as_type(t)
    _check_n(n, ORACLE_MAX_N, "enum_ordered_partitions_of_type")
    _check_type(n, t)
    if method == EnumMethod.recursive:
        return sum(1 for _ in _typed_recursive(tuple(range(n)), t.parts))
    return len(_typed_iterative(n, t.parts))


# complete cobweb posets on labeled vertices


def _relation_of(blocks: Blocks, canonical: List[Tuple[int, int]]) -> frozenset:
    # vertex i of the canonical chain carries label order[i]
    order = [e for block in blocks for e in block]
    return frozenset((order[i], order[j]) for i, j in canonical)


def enum_complete_cobwebs(
    n: int, t: TypeLike, method: EnumMethod = EnumMethod.recursive
) -> BigCount:
    """
    Distinct labeled complete cobweb posets of type t on {0..n-1}: every
    ordered partition of the type is dressed with the full relation between
    consecutive blocks, and the resulting strict orders are deduplicated.
    """
    t = _as_type(t)
    _check_n(n, COMPLETE_COBWEBS_MAX_N, "enum_complete_cobwebs")
    _check_type(n, t)
    canonical = strict_order_matrix(complete_chain(t.parts)).ones_positions()
    if method == EnumMethod.recursive:
        partitions = _typed_recursive(tuple(range(n)), t.parts)
    else:
        partitions = iter(sorted(_typed_iterative(n, t.parts)))
    posets = {_relation_of(blocks, canonical) for blocks in partitions}
    return len(posets)
