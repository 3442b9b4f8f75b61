import math
from typing import Iterator, Optional, Tuple

from cobweb_lab.models.counting import CompositionType
from cobweb_lab.models.custom_errors import ArgumentError


def _generate(n: int, k: Optional[int]) -> Iterator[Tuple[int, ...]]:
    # explicit stack, first part ascending, so tuples come out lexicographically
    stack = [((), n)]
    while stack:
        prefix, rest = stack.pop()
        if rest == 0:
            if k is None or len(prefix) == k:
                yield prefix
            continue
        if k is not None:
            slots = k - len(prefix)
            if slots == 0:
                continue
            top = rest - (slots - 1)
        else:
            top = rest
        for first in range(top, 0, -1):
            stack.append((prefix + (first,), rest - first))


class Compositions:
    """
    Restartable stream of the compositions of n (into exactly k parts when k is
    given) in lexicographic order of part tuples. Every iteration starts over.
    """

    def __init__(self, n: int, k: Optional[int] = None):
        if n < 1:
            raise ArgumentError(f"n must be positive, got {n}")
        if k is not None and not 1 <= k <= n:
            raise ArgumentError(f"k must lie in 1..{n}, got {k}")
        self.n = n
        self.k = k

    def __iter__(self) -> Iterator[CompositionType]:
        for parts in _generate(self.n, self.k):
            yield CompositionType(parts=parts)

    def __len__(self) -> int:
        if self.k is None:
            return 2 ** (self.n - 1)
        return math.comb(self.n - 1, self.k - 1)

    def clone(self) -> "Compositions":
        return Compositions(self.n, self.k)


def compositions(n: int, k: Optional[int] = None) -> Compositions:
    return Compositions(n, k)
