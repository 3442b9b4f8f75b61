"""
Exact counting formulas for complete cobweb posets and level relations.

All arithmetic uses Python integers; nothing here touches floating point.

The source formula for surjections is printed as
sum_{r=0}^{k} (-1)^(N-k) r^N C(N, r); its sign does not alternate and its
binomial runs over N, so it does not equal k! S(N, k). The standard
inclusion-exclusion sum_{r=0}^{k} (-1)^(k-r) C(k, r) r^N is used instead.
"""

import math
from functools import lru_cache
from typing import Tuple, Union

from cobweb_lab.constants import RELATIONS_TOTAL_MAX_N
from cobweb_lab.counting.compositions import compositions
from cobweb_lab.models.counting import BigCount, CompositionType
from cobweb_lab.models.custom_errors import (
    ArgumentError,
    FeasibilityError,
    FormulaMismatchError,
)
from cobweb_lab.utils.logger import get_logger

logger = get_logger(__name__)

TypeLike = Union[CompositionType, Tuple[int, ...]]


def _as_type(t: TypeLike) -> CompositionType:
    if isinstance(t, CompositionType):
        return t
    return CompositionType(parts=tuple(t))


def multinomial(n: int, t: TypeLike) -> BigCount:
    """N! / (f_1! ... f_k!): complete cobwebs of type t on n labeled vertices."""
    t = _as_type(t)
    if t.total != n:
        raise ArgumentError(f"type {t} composes {t.total}, not {n}")
    result = math.factorial(n)
    for part in t.parts:
        result //= math.factorial(part)
    return result


@lru_cache(maxsize=None)
def _stirling_row(n: int) -> Tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _stirling_row(n - 1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        # S(n, k) = k S(n-1, k) + S(n-1, k-1)
        row[k] = (k * prev[k] if k < len(prev) else 0) + prev[k - 1]
    return tuple(row)


def stirling2(n: int, k: int) -> BigCount:
    if n < 0 or k < 0:
        raise ArgumentError(f"stirling2 needs non-negative arguments, got ({n}, {k})")
    if k > n:
        return 0
    # build rows bottom-up so the cache never recurses deeply
    for m in range(n + 1):
        _stirling_row(m)
    return _stirling_row(n)[k]


def surjection_count_inclusion_exclusion(n: int, k: int) -> BigCount:
    if n < 0 or k < 0:
        raise ArgumentError(f"surjection count needs non-negative arguments, got ({n}, {k})")
    return sum((-1) ** (k - r) * math.comb(k, r) * r**n for r in range(k + 1))


def surjection_count(n: int, k: int) -> BigCount:
    """
    Maps from an n-set onto a k-set, i.e. complete k-level cobwebs on n
    vertices: k! S(n, k), checked against inclusion-exclusion.
    """
    if n < 1 or k < 1:
        raise ArgumentError(f"surjection count needs positive arguments, got ({n}, {k})")
    by_stirling = math.factorial(k) * stirling2(n, k)
    by_sieve = surjection_count_inclusion_exclusion(n, k)
    if by_stirling != by_sieve:
        raise FormulaMismatchError(
            f"k!S(n,k)={by_stirling} but inclusion-exclusion gives {by_sieve} for n={n}, k={k}"
        )
    return by_stirling


def fubini(n: int) -> BigCount:
    """T_n, the number of ordered partitions of an n-set."""
    if n < 1:
        raise ArgumentError(f"fubini needs a positive argument, got {n}")
    return sum(math.factorial(k) * stirling2(n, k) for k in range(1, n + 1))


def complete_cobwebs_total(n: int) -> BigCount:
    """T_n again, summed type by type over all compositions of n."""
    return sum(multinomial(n, t) for t in compositions(n))


def tuples_of_type(t: TypeLike) -> BigCount:
    """f_1 * ... * f_k, the size of V_1 x ... x V_k."""
    return _as_type(t).product


def relations_of_type(t: TypeLike) -> BigCount:
    """2^(f_1 ... f_k) - 1 non-empty k-ary relations of the given type."""
    return 2 ** _as_type(t).product - 1


def relations_total(n: int) -> BigCount:
    """Sum of relations_of_type over every composition of n."""
    if n < 1:
        raise ArgumentError(f"relations_total needs a positive argument, got {n}")
    if n > RELATIONS_TOTAL_MAX_N:
        raise FeasibilityError(f"relations_total is limited to n <= {RELATIONS_TOTAL_MAX_N}, got {n}")
    total = 0
    for t in compositions(n):
        total += relations_of_type(t)
    logger.debug("relations_total(%d) summed %d composition(s)", n, 2 ** (n - 1))
    return total
