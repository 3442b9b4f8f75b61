"""
Plain-text formats for Boolean matrices, real matrices and chains.

Matrix text: a header line "R C" followed by R rows. Boolean rows are C
characters from {0,1} without separators; real rows are C space separated
decimals. Chain text: a line with k, a line with the k level sizes, then the
k-1 blocks in Boolean matrix text separated by blank lines.
"""

import math
from typing import List, Tuple

from cobweb_lab.models.chain import CobwebChain, LevelSequence
from cobweb_lab.models.custom_errors import MatrixParseError
from cobweb_lab.models.matrix import BoolMatrix, RealMatrix


class _Cursor:
    def __init__(self, text: str):
        self.lines = text.splitlines()
        self.pos = 0

    def skip_blank(self):
        while self.pos < len(self.lines) and not self.lines[self.pos].strip():
            self.pos += 1

    def take(self, what: str) -> Tuple[int, str]:
        """Return (1-based line number, stripped line)."""
        if self.pos >= len(self.lines):
            raise MatrixParseError(f"unexpected end of input, expected {what}", self.pos + 1)
        self.pos += 1
        return self.pos, self.lines[self.pos - 1].strip()

    def expect_end(self):
        self.skip_blank()
        if self.pos < len(self.lines):
            raise MatrixParseError("unexpected trailing content", self.pos + 1)


def _parse_ints(line: str, lineno: int, what: str) -> List[int]:
    try:
        return [int(part) for part in line.split()]
    except ValueError:
        raise MatrixParseError(f"{what} must be decimal integers, got '{line}'", lineno)


def _read_header(cur: _Cursor) -> Tuple[int, int]:
    cur.skip_blank()
    lineno, line = cur.take("header 'R C'")
    values = _parse_ints(line, lineno, "header")
    if len(values) != 2:
        raise MatrixParseError(f"header must be 'R C', got '{line}'", lineno)
    rows, cols = values
    if rows < 1 or cols < 1:
        raise MatrixParseError(f"matrix dimensions must be positive, got {rows}x{cols}", lineno)
    return rows, cols


def _read_bool_matrix(cur: _Cursor) -> BoolMatrix:
    rows, cols = _read_header(cur)
    body = []
    for r in range(rows):
        lineno, line = cur.take(f"row {r + 1} of {rows}")
        if len(line) != cols:
            raise MatrixParseError(f"expected {cols} character(s), got {len(line)}", lineno)
        if set(line) - {"0", "1"}:
            raise MatrixParseError(f"rows may only contain 0 and 1, got '{line}'", lineno)
        body.append(line)
    return BoolMatrix(body)


def parse_bool_matrix(text: str) -> BoolMatrix:
    cur = _Cursor(text)
    matrix = _read_bool_matrix(cur)
    cur.expect_end()
    return matrix


def format_bool_matrix(m: BoolMatrix) -> str:
    return f"{m.rows} {m.cols}\n" + "".join(row + "\n" for row in m.to_strings())


def parse_real_matrix(text: str) -> RealMatrix:
    cur = _Cursor(text)
    rows, cols = _read_header(cur)
    body = []
    for r in range(rows):
        lineno, line = cur.take(f"row {r + 1} of {rows}")
        parts = line.split()
        if len(parts) != cols:
            raise MatrixParseError(f"expected {cols} value(s), got {len(parts)}", lineno)
        try:
            values = [float(part) for part in parts]
        except ValueError:
            raise MatrixParseError(f"rows must be decimal numbers, got '{line}'", lineno)
        if not all(math.isfinite(v) for v in values):
            raise MatrixParseError("entries must be finite", lineno)
        body.append(values)
    cur.expect_end()
    return RealMatrix(body)


def format_real_matrix(m: RealMatrix) -> str:
    # repr of a float round-trips exactly
    lines = [" ".join(repr(float(v)) for v in row) for row in m.to_rows()]
    return f"{m.rows} {m.cols}\n" + "".join(line + "\n" for line in lines)


def parse_chain(text: str) -> CobwebChain:
    cur = _Cursor(text)
    cur.skip_blank()
    lineno, line = cur.take("level count k")
    values = _parse_ints(line, lineno, "level count")
    if len(values) != 1 or values[0] < 1:
        raise MatrixParseError(f"first line must be a positive level count, got '{line}'", lineno)
    k = values[0]

    lineno, line = cur.take(f"{k} level size(s)")
    sizes = _parse_ints(line, lineno, "level sizes")
    if len(sizes) != k:
        raise MatrixParseError(f"expected {k} level size(s), got {len(sizes)}", lineno)
    if any(size < 1 for size in sizes):
        raise MatrixParseError(f"level sizes must be positive, got '{line}'", lineno)

    blocks = []
    for i in range(k - 1):
        cur.skip_blank()
        header_line = cur.pos + 1
        block = _read_bool_matrix(cur)
        if block.shape != (sizes[i], sizes[i + 1]):
            raise MatrixParseError(
                f"block {i} must be {sizes[i]}x{sizes[i + 1]}, got {block.rows}x{block.cols}",
                header_line,
            )
        blocks.append(block)
    cur.expect_end()
    return CobwebChain(levels=LevelSequence(sizes=tuple(sizes)), blocks=tuple(blocks))


def format_chain(c: CobwebChain) -> str:
    head = f"{c.k}\n{' '.join(str(s) for s in c.levels.sizes)}\n"
    if not c.blocks:
        return head
    return head + "\n" + "\n".join(format_bool_matrix(b) for b in c.blocks)


def parse_blocks(text: str) -> List[BoolMatrix]:
    """One or more Boolean matrices in matrix text, separated by blank lines."""
    cur = _Cursor(text)
    blocks = []
    cur.skip_blank()
    while cur.pos < len(cur.lines):
        blocks.append(_read_bool_matrix(cur))
        cur.skip_blank()
    if not blocks:
        raise MatrixParseError("no matrix found", 1)
    return blocks
