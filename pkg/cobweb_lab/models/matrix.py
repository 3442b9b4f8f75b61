"""
Dense matrix values shared by every module.

BoolMatrix carries biadjacency, adjacency and zeta matrices; RealMatrix the
operands of the matrix-exponential identities. Both wrap read-only numpy
arrays, so values are immutable and safe to share between threads.
"""

from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

from cobweb_lab.models.custom_errors import ArgumentError, BoundsError, ShapeError

Position = Tuple[int, int]
RowsLike = Union[Sequence[Sequence[int]], Sequence[str], np.ndarray]


def _as_2d(entries, kind: str) -> np.ndarray:
    if isinstance(entries, (list, tuple)) and entries and isinstance(entries[0], str):
        if any(set(row) - {"0", "1"} for row in entries):
            raise ArgumentError(f"{kind} rows must use only the characters 0 and 1")
        entries = [[int(ch) for ch in row] for row in entries]
    try:
        arr = np.asarray(entries)
    except ValueError as err:
        raise ShapeError(f"{kind} rows must all have the same length: {err}")
    if arr.ndim != 2:
        raise ShapeError(f"{kind} must be two-dimensional, got {arr.ndim} dimension(s)")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ShapeError(f"{kind} must have at least one row and one column")
    return arr


class BoolMatrix:
    """Dense 0/1 matrix. Equality is exact bit equality."""

    __slots__ = ("_data",)

    def __init__(self, entries: RowsLike):
        arr = _as_2d(entries, "BoolMatrix")
        if arr.dtype != np.bool_:
            if not np.isin(arr, (0, 1)).all():
                raise ArgumentError("BoolMatrix entries must be 0 or 1")
        data = arr.astype(bool, copy=True)
        data.setflags(write=False)
        self._data = data

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BoolMatrix":
        return cls(np.zeros((rows, cols), dtype=bool))

    @classmethod
    def ones(cls, rows: int, cols: int) -> "BoolMatrix":
        return cls(np.ones((rows, cols), dtype=bool))

    @classmethod
    def identity(cls, n: int) -> "BoolMatrix":
        return cls(np.eye(n, dtype=bool))

    @classmethod
    def from_row_masks(cls, masks: Sequence[int], cols: int) -> "BoolMatrix":
        """Build from per-row bitmasks where bit j is column j."""
        return cls([[(mask >> j) & 1 for j in range(cols)] for mask in masks])

    @property
    def rows(self) -> int:
        return int(self._data.shape[0])

    @property
    def cols(self) -> int:
        return int(self._data.shape[1])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def data(self) -> np.ndarray:
        """Read-only boolean view of the entries."""
        return self._data

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, pos: Position) -> int:
        i, j = pos
        self._check_position(i, j)
        return int(self._data[i, j])

    def _check_position(self, i: int, j: int):
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise BoundsError(f"position ({i}, {j}) outside {self.rows}x{self.cols} matrix")

    def __eq__(self, other) -> bool:
        if not isinstance(other, BoolMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self._data, other._data))

    def __hash__(self) -> int:
        return hash((self.shape, self._data.tobytes()))

    def __or__(self, other: "BoolMatrix") -> "BoolMatrix":
        self._require_same_shape(other)
        return BoolMatrix(self._data | other._data)

    def __and__(self, other: "BoolMatrix") -> "BoolMatrix":
        self._require_same_shape(other)
        return BoolMatrix(self._data & other._data)

    def __le__(self, other: "BoolMatrix") -> bool:
        """Entrywise order: every 1 of self is a 1 of other."""
        self._require_same_shape(other)
        return not bool((self._data & ~other._data).any())

    def _require_same_shape(self, other: "BoolMatrix"):
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch: {self.shape} vs {other.shape}")

    def transpose(self) -> "BoolMatrix":
        return BoolMatrix(self._data.T)

    def count_ones(self) -> int:
        return int(self._data.sum())

    def is_zero(self) -> bool:
        return not bool(self._data.any())

    def is_all_ones(self) -> bool:
        return bool(self._data.all())

    def ones_positions(self) -> List[Position]:
        return [(int(i), int(j)) for i, j in zip(*np.nonzero(self._data))]

    def zero_positions(self) -> List[Position]:
        """Row-major list of the 0 entries."""
        return [(int(i), int(j)) for i, j in zip(*np.nonzero(~self._data))]

    def with_entries(self, positions: Iterable[Position], value: int) -> "BoolMatrix":
        data = self._data.copy()
        for i, j in positions:
            self._check_position(i, j)
            data[i, j] = bool(value)
        return BoolMatrix(data)

    def row_masks(self) -> List[int]:
        """Per-row bitmasks, bit j set iff column j holds a 1."""
        weights = 1 << np.arange(self.cols, dtype=object)
        return [int(sum(weights[row])) for row in self._data]

    def to_rows(self) -> List[List[int]]:
        return self._data.astype(int).tolist()

    def to_strings(self) -> List[str]:
        return ["".join("1" if x else "0" for x in row) for row in self._data]

    def __repr__(self) -> str:
        return f"BoolMatrix({self.to_strings()!r})"


class RealMatrix:
    """Small dense real matrix (float64)."""

    __slots__ = ("_data",)

    def __init__(self, entries: Union[Sequence[Sequence[float]], np.ndarray]):
        arr = _as_2d(entries, "RealMatrix")
        try:
            data = arr.astype(np.float64, copy=True)
        except (TypeError, ValueError) as err:
            raise ArgumentError(f"RealMatrix entries must be real numbers: {err}")
        data.setflags(write=False)
        self._data = data

    @classmethod
    def identity(cls, n: int) -> "RealMatrix":
        return cls(np.eye(n))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RealMatrix":
        return cls(np.zeros((rows, cols)))

    @classmethod
    def diag(cls, values: Sequence[float]) -> "RealMatrix":
        return cls(np.diag(np.asarray(values, dtype=np.float64)))

    @property
    def rows(self) -> int:
        return int(self._data.shape[0])

    @property
    def cols(self) -> int:
        return int(self._data.shape[1])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def data(self) -> np.ndarray:
        return self._data

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_finite(self) -> bool:
        return bool(np.isfinite(self._data).all())

    def __getitem__(self, pos: Position) -> float:
        i, j = pos
        return float(self._data[i, j])

    def __eq__(self, other) -> bool:
        if not isinstance(other, RealMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self._data, other._data))

    def __hash__(self) -> int:
        return hash((self.shape, self._data.tobytes()))

    def max_abs_diff(self, other: "RealMatrix") -> float:
        """Max-norm of the difference."""
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch: {self.shape} vs {other.shape}")
        return float(np.max(np.abs(self._data - other._data)))

    def to_rows(self) -> List[List[float]]:
        return self._data.tolist()

    def __repr__(self) -> str:
        return f"RealMatrix({self.to_rows()!r})"
