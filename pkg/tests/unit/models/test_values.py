"""
Counting, oracle and Ferrers value model tests
"""

import pytest
from pydantic import ValidationError

from cobweb_lab.models.counting import CompositionType
from cobweb_lab.models.custom_errors import ArgumentError
from cobweb_lab.models.ferrers import FerrersReport
from cobweb_lab.models.matrix import BoolMatrix
from cobweb_lab.models.oracle import GradedRelationChain, OrderedPartition


class TestCompositionType:
    def test_derived_quantities(self):
        t = CompositionType.parse("2,3,1")
        assert t.k == 3
        assert t.total == 6
        assert t.product == 6
        assert t.adjacent_cells == 2 * 3 + 3 * 1
        assert str(t) == "2,3,1"

    def test_parse_rejects_text(self):
        with pytest.raises(ArgumentError):
            CompositionType.parse("2;3")

    def test_parts_must_be_positive(self):
        with pytest.raises(ValidationError):
            CompositionType.of(1, 0)


class TestOrderedPartition:
    def test_type_and_str(self):
        p = OrderedPartition(blocks=((2,), (0, 1)))
        assert p.n == 3
        assert p.type == CompositionType.of(1, 2)
        assert str(p) == "2 | 0 1"

    @pytest.mark.parametrize(
        "blocks",
        [
            ((0,), ()),
            ((0, 1), (1,)),
            ((0,), (2,)),
        ],
    )
    def test_invalid_partitions_rejected(self, blocks):
        with pytest.raises(ValidationError):
            OrderedPartition(blocks=blocks)


class TestGradedRelationChain:
    def test_to_chain(self):
        g = GradedRelationChain(type=CompositionType.of(1, 2), blocks=(BoolMatrix(["01"]),))
        chain = g.to_chain()
        assert chain.levels.sizes == (1, 2)
        assert chain.blocks[0] == BoolMatrix(["01"])

    def test_block_shape_checked(self):
        with pytest.raises(ValidationError):
            GradedRelationChain(type=CompositionType.of(1, 2), blocks=(BoolMatrix(["0", "1"]),))


class TestFerrersReport:
    def test_witness_required_when_not_ferrers(self):
        with pytest.raises(ValidationError):
            FerrersReport(is_dim1=False)

    def test_witness_forbidden_when_ferrers(self):
        with pytest.raises(ValidationError):
            FerrersReport(is_dim1=True, witness=(0, 1, 0, 1))

    def test_ferrers_means_dimension_one(self):
        with pytest.raises(ValidationError):
            FerrersReport(is_dim1=True, dimension=2)
        assert FerrersReport(is_dim1=True, dimension=1).dimension == 1
