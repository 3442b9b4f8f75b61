"""
Relation, surjection and graded chain enumeration tests
"""

from unittest.mock import patch

import pytest

from cobweb_lab.counting import relations_of_type, surjection_count
from cobweb_lab.ferrers import is_ferrers_dim1
from cobweb_lab.models.counting import CompositionType
from cobweb_lab.models.custom_errors import ArgumentError, FeasibilityError
from cobweb_lab.models.oracle import ChainConstraint, EnumMethod
from cobweb_lab.oracle import (
    enum_graded_chains,
    enum_graded_total,
    enum_nonempty_subsets_of_product,
    enum_surjections,
    iter_graded_chains,
)

METHODS = [EnumMethod.recursive, EnumMethod.iterative]


class TestSubsetsOfProduct:
    @pytest.mark.parametrize("method", METHODS)
    def test_counts_match_formula(self, method):
        for t in [(1,), (2, 2), (1, 3, 2), (4, 4)]:
            assert enum_nonempty_subsets_of_product(t, method) == relations_of_type(t)

    def test_bound(self):
        with pytest.raises(FeasibilityError):
            enum_nonempty_subsets_of_product((3, 7))

    def test_bound_is_checked_before_building_tuples(self):
        with patch("cobweb_lab.oracle.relations.product") as tuples:
            with pytest.raises(FeasibilityError):
                enum_nonempty_subsets_of_product((3000, 3000))
        tuples.assert_not_called()


class TestSurjections:
    @pytest.mark.parametrize("method", METHODS)
    def test_counts_match_formula(self, method):
        assert enum_surjections(4, 3, method) == 36
        for n in range(1, 6):
            for k in range(1, 6):
                assert enum_surjections(n, k, method) == surjection_count(n, k)

    def test_bounds(self):
        with pytest.raises(ArgumentError):
            enum_surjections(0, 2)
        with pytest.raises(FeasibilityError):
            enum_surjections(12, 5)


class TestGradedChains:
    @pytest.mark.parametrize("method", METHODS)
    def test_single_cell(self, method):
        assert enum_graded_chains((1, 1), ChainConstraint.all_blocks, method) == 2
        assert enum_graded_chains((1, 1), ChainConstraint.no_empty_row_col, method) == 1
        assert enum_graded_chains((1, 1), ChainConstraint.ferrers_blocks, method) == 2

    @pytest.mark.parametrize("method", METHODS)
    def test_two_by_two(self, method):
        assert enum_graded_chains((2, 2), ChainConstraint.all_blocks, method) == 16
        assert enum_graded_chains((2, 2), ChainConstraint.no_empty_row_col, method) == 7
        # all but the two crossed matchings
        assert enum_graded_chains((2, 2), ChainConstraint.ferrers_blocks, method) == 14

    def test_one_level_has_one_empty_chain(self):
        for constraint in ChainConstraint:
            assert enum_graded_chains((3,), constraint) == 1

    def test_methods_agree_on_three_levels(self):
        for constraint in ChainConstraint:
            counts = {m: enum_graded_chains((1, 2, 2), constraint, m) for m in METHODS}
            assert counts[EnumMethod.recursive] == counts[EnumMethod.iterative]

    def test_iterated_chains_satisfy_the_profile(self):
        chains = list(iter_graded_chains((2, 2), ChainConstraint.ferrers_blocks))
        assert len(chains) == 14
        assert all(is_ferrers_dim1(c.blocks[0]).is_dim1 for c in chains)
        assert all(c.type == CompositionType.of(2, 2) for c in chains)
        assert chains[0].to_chain().levels.sizes == (2, 2)

    def test_totals(self):
        # <1,1> and <2>
        assert enum_graded_total(2, ChainConstraint.all_blocks) == 3
        assert enum_graded_total(2, ChainConstraint.no_empty_row_col) == 2

    def test_bound(self):
        with pytest.raises(FeasibilityError):
            enum_graded_chains((5, 5), ChainConstraint.all_blocks)
