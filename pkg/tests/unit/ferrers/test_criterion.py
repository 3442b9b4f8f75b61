"""
Ferrers dimension 1 criterion tests
"""

from itertools import product

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cobweb_lab.ferrers import (
    ferrers_by_nested_supports,
    ferrers_by_scan,
    ferrers_dimension,
    is_ferrers_dim1,
    masks_nested,
)
from cobweb_lab.matrix_core import direct_sum
from cobweb_lab.models.matrix import BoolMatrix
from cobweb_lab.utils.rng import RNG


def all_matrices(rows, cols):
    for bits in product((0, 1), repeat=rows * cols):
        yield BoolMatrix(np.array(bits, dtype=bool).reshape(rows, cols))


@st.composite
def bool_matrices(draw, max_dim=5):
    rows = draw(st.integers(1, max_dim))
    cols = draw(st.integers(1, max_dim))
    bits = draw(st.lists(st.booleans(), min_size=rows * cols, max_size=rows * cols))
    return BoolMatrix(np.array(bits, dtype=bool).reshape(rows, cols))


class TestWitness:
    def test_cut_block_is_not_ferrers(self, cut_block):
        report = is_ferrers_dim1(cut_block)
        assert not report.is_dim1
        assert report.witness == (0, 1, 1, 2)
        assert report.dimension is None

    def test_witness_is_a_permutation_submatrix(self, cut_block):
        r1, r2, c1, c2 = is_ferrers_dim1(cut_block).witness
        sub = [[cut_block[r, c] for c in (c1, c2)] for r in (r1, r2)]
        assert sub in ([[1, 0], [0, 1]], [[0, 1], [1, 0]])

    def test_identity_witness(self):
        assert is_ferrers_dim1(BoolMatrix.identity(2)).witness == (0, 1, 0, 1)

    def test_block_diagonal_of_ferrers_blocks_need_not_be_ferrers(self):
        ones = BoolMatrix(["1"])
        assert is_ferrers_dim1(ones).is_dim1
        glued = direct_sum([ones, ones])
        assert not is_ferrers_dim1(glued).is_dim1

    def test_ferrers_report(self):
        report = is_ferrers_dim1(BoolMatrix(["111", "110", "000"]))
        assert report.is_dim1
        assert report.witness is None
        assert report.dimension == 1


class TestEdgeCases:
    @pytest.mark.parametrize("rows,cols", [(1, 1), (1, 4), (4, 1)])
    def test_single_row_or_column_is_ferrers(self, rows, cols):
        for b in all_matrices(rows, cols):
            assert is_ferrers_dim1(b).is_dim1

    def test_zero_and_all_ones_are_ferrers(self):
        assert is_ferrers_dim1(BoolMatrix.zeros(3, 4)).is_dim1
        assert is_ferrers_dim1(BoolMatrix.ones(3, 4)).is_dim1

    def test_masks_nested(self):
        assert masks_nested([0b001, 0b111, 0b011])
        assert not masks_nested([0b01, 0b10])
        assert masks_nested([])


class TestImplementationsAgree:
    @pytest.mark.parametrize("rows,cols", [(r, c) for r in range(1, 4) for c in range(1, 4)])
    def test_exhaustive_small_shapes(self, rows, cols):
        for b in all_matrices(rows, cols):
            scan = ferrers_by_scan(b)
            nested = ferrers_by_nested_supports(b)
            assert scan.is_dim1 == nested.is_dim1
            assert is_ferrers_dim1(b).is_dim1 == scan.is_dim1

    def test_exhaustive_four_by_four(self):
        for b in all_matrices(4, 4):
            assert ferrers_by_scan(b).is_dim1 == ferrers_by_nested_supports(b).is_dim1

    def test_random_larger_matrices(self):
        rng = RNG(17)
        for _ in range(10_000):
            b = rng.bool_matrix(rng.randint(5, 8), rng.randint(5, 8), rng.random())
            scan = ferrers_by_scan(b)
            nested = ferrers_by_nested_supports(b)
            assert scan.is_dim1 == nested.is_dim1

    @given(bool_matrices())
    def test_nested_witness_is_valid(self, b):
        report = ferrers_by_nested_supports(b)
        if report.is_dim1:
            return
        r1, r2, c1, c2 = report.witness
        assert r1 < r2 and c1 < c2
        a, x, y, d = b[r1, c1], b[r1, c2], b[r2, c1], b[r2, c2]
        assert a == d and x == y and a != x

    @given(bool_matrices())
    def test_transpose_invariant(self, b):
        assert is_ferrers_dim1(b).is_dim1 == is_ferrers_dim1(b.transpose()).is_dim1

    @given(bool_matrices(max_dim=4), st.data())
    def test_row_and_column_permutation_invariant(self, b, data):
        rows = data.draw(st.permutations(range(b.rows)))
        cols = data.draw(st.permutations(range(b.cols)))
        permuted = BoolMatrix(b.data[np.ix_(list(rows), list(cols))])
        assert is_ferrers_dim1(permuted).is_dim1 == is_ferrers_dim1(b).is_dim1


class TestDeletionMonotonicity:
    def test_deleting_an_arc_never_raises_dimension_on_two_by_three(self):
        for b in all_matrices(2, 3):
            if is_ferrers_dim1(b).is_dim1:
                continue
            before = ferrers_dimension(b, max_d=3)
            assert before is not None
            for cell in b.ones_positions():
                after = ferrers_dimension(b.with_entries([cell], 0), max_d=3)
                assert after is not None
                assert after <= before
