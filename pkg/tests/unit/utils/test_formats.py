"""Tests for utils/formats.py"""

import pytest

from cobweb_lab.cobweb import complete_chain
from cobweb_lab.models.chain import LevelSequence
from cobweb_lab.models.custom_errors import MatrixParseError
from cobweb_lab.models.matrix import BoolMatrix, RealMatrix
from cobweb_lab.utils.formats import (
    format_bool_matrix,
    format_chain,
    format_real_matrix,
    parse_blocks,
    parse_bool_matrix,
    parse_chain,
    parse_real_matrix,
)


class TestBoolMatrixText:
    def test_format(self, cut_block):
        assert format_bool_matrix(cut_block) == "2 3\n101\n110\n"

    def test_parse(self, cut_block):
        assert parse_bool_matrix("2 3\n101\n110\n") == cut_block

    def test_surrounding_blank_lines_are_ignored(self, cut_block):
        assert parse_bool_matrix("\n2 3\n101\n110\n\n\n") == cut_block

    @pytest.mark.parametrize(
        "text,line",
        [
            ("2\n10\n", 1),
            ("x 2\n10\n", 1),
            ("0 2\n", 1),
            ("2 2\n10\n1\n", 3),
            ("2 2\n10\n12\n", 3),
            ("2 2\n10\n", 3),
            ("1 2\n10\n01\n", 3),
        ],
    )
    def test_malformed_input_reports_the_line(self, text, line):
        with pytest.raises(MatrixParseError) as exc:
            parse_bool_matrix(text)
        assert exc.value.line == line
        assert str(exc.value).startswith(f"line {line}:")


class TestRealMatrixText:
    def test_round_trip_is_exact(self):
        m = RealMatrix([[0.1, -2.5], [1e-300, 3.0]])
        assert parse_real_matrix(format_real_matrix(m)) == m

    def test_format(self):
        assert format_real_matrix(RealMatrix([[1.0, -0.5]])) == "1 2\n1.0 -0.5\n"

    def test_non_finite_entries_raise(self):
        with pytest.raises(MatrixParseError):
            parse_real_matrix("1 1\nnan\n")
        with pytest.raises(MatrixParseError):
            parse_real_matrix("1 1\ninf\n")

    def test_wrong_width_raises(self):
        with pytest.raises(MatrixParseError) as exc:
            parse_real_matrix("2 2\n1 2\n3\n")
        assert exc.value.line == 3


class TestChainText:
    def test_format_complete_chain(self):
        text = format_chain(complete_chain((2, 1, 2)))
        assert text == "3\n2 1 2\n\n2 1\n1\n1\n\n1 2\n11\n"

    def test_single_level(self):
        text = format_chain(complete_chain((4,)))
        assert text == "1\n4\n"
        assert parse_chain(text).levels == LevelSequence.of(4)

    def test_parse_recovers_blocks(self, cut_block):
        c = parse_chain("2\n2 3\n\n2 3\n101\n110\n")
        assert c.blocks == (cut_block,)
        assert parse_chain(format_chain(c)) == c

    def test_block_shape_mismatch_names_the_block_header(self):
        text = "3\n2 3 1\n\n2 3\n111\n111\n\n2 1\n1\n1\n"
        with pytest.raises(MatrixParseError) as exc:
            parse_chain(text)
        assert exc.value.line == 8
        assert "block 1" in str(exc.value)

    def test_size_count_mismatch_raises(self):
        with pytest.raises(MatrixParseError) as exc:
            parse_chain("2\n2 3 4\n")
        assert exc.value.line == 2

    def test_missing_block_raises(self):
        with pytest.raises(MatrixParseError):
            parse_chain("2\n2 3\n")


class TestBlocksText:
    def test_several_blocks(self):
        blocks = parse_blocks("1 2\n11\n\n2 1\n1\n0\n")
        assert blocks == [BoolMatrix(["11"]), BoolMatrix(["1", "0"])]

    def test_empty_input_raises(self):
        with pytest.raises(MatrixParseError):
            parse_blocks("\n\n")
