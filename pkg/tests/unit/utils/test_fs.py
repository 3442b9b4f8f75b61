"""Tests for utils/fs.py"""

import json
import os

import pytest
import yaml
from pydantic import ValidationError

from cobweb_lab.cobweb import complete_chain
from cobweb_lab.models.custom_errors import ArgumentError, MatrixParseError
from cobweb_lab.utils.fs import (
    read_blocks_file,
    read_bool_matrix_file,
    read_chain_file,
    read_config_from_file,
    read_real_matrix_file,
    save_data_to_file,
    write_chain_file,
)


class TestReadConfigFromFile:
    def test_defaults_without_file(self):
        config = read_config_from_file()
        assert config.verify.seed == 0
        assert config.verify.max_n == 7

    def test_yaml_file(self, write_file):
        path = write_file("verify.yaml", "verify:\n  seed: 5\n  max_n: 4\n")
        config = read_config_from_file(path)
        assert config.verify.seed == 5
        assert config.verify.max_n == 4

    def test_empty_file_gives_defaults(self, write_file):
        assert read_config_from_file(write_file("empty.yaml", "")).verify.seed == 0

    def test_bare_param_addresses_verify(self):
        config = read_config_from_file(param=["seed=9", "exp_tol=1.0e-13"])
        assert config.verify.seed == 9
        assert config.verify.exp_tol == 1e-13

    def test_dotted_param_overrides_file(self, write_file):
        path = write_file("verify.yaml", "verify:\n  seed: 5\n")
        config = read_config_from_file(path, ["verify.seed=6", "verify.random_chains=3"])
        assert config.verify.seed == 6
        assert config.verify.random_chains == 3

    def test_param_without_equals_raises(self):
        with pytest.raises(ArgumentError):
            read_config_from_file(param=["seed"])

    def test_unknown_key_is_rejected(self):
        with pytest.raises(ValidationError):
            read_config_from_file(param=["no_such_key=1"])

    def test_out_of_range_value_is_rejected(self):
        with pytest.raises(ValidationError):
            read_config_from_file(param=["max_n=99"])

    def test_non_mapping_file_raises(self, write_file):
        with pytest.raises(MatrixParseError):
            read_config_from_file(write_file("list.yaml", "- 1\n- 2\n"))

    def test_invalid_yaml_raises(self, write_file):
        with pytest.raises(MatrixParseError):
            read_config_from_file(write_file("bad.yaml", "verify: [1, 2\n"))

    def test_missing_file_raises_os_error(self, tmp_path):
        with pytest.raises(OSError):
            read_config_from_file(str(tmp_path / "missing.yaml"))

    def test_undecodable_file_raises(self, tmp_path):
        path = tmp_path / "latin1.yaml"
        path.write_bytes(b"verify:\n  seed: \xff\n")
        with pytest.raises(MatrixParseError):
            read_config_from_file(str(path))

    def test_misspelled_section_is_rejected(self):
        with pytest.raises(ValidationError):
            read_config_from_file(param=["verfy.max_n=3"])


class TestSaveDataToFile:
    def test_json(self, temp_output_dir):
        path = os.path.join(temp_output_dir, "out.json")
        save_data_to_file({"count": "13"}, path)
        with open(path, encoding="utf-8") as f:
            assert json.load(f) == {"count": "13"}

    def test_yaml_keeps_key_order(self, temp_output_dir):
        path = os.path.join(temp_output_dir, "out.yml")
        save_data_to_file({"b": 1, "a": 2}, path)
        with open(path, encoding="utf-8") as f:
            text = f.read()
        assert text.index("b:") < text.index("a:")
        assert yaml.safe_load(text) == {"b": 1, "a": 2}

    def test_unknown_extension_raises(self, temp_output_dir):
        with pytest.raises(ArgumentError):
            save_data_to_file({}, os.path.join(temp_output_dir, "out.txt"))


class TestMatrixFiles:
    def test_read_bool_matrix(self, write_file, cut_block):
        assert read_bool_matrix_file(write_file("b.mat", "2 3\n101\n110\n")) == cut_block

    def test_read_real_matrix(self, write_file):
        m = read_real_matrix_file(write_file("a.txt", "1 2\n0.5 -1\n"))
        assert m.to_rows() == [[0.5, -1.0]]

    def test_chain_file_round_trip(self, temp_output_dir):
        path = os.path.join(temp_output_dir, "c.chain")
        c = complete_chain((1, 2, 2))
        write_chain_file(c, path)
        assert read_chain_file(path) == c

    def test_undecodable_matrix_raises(self, tmp_path):
        path = tmp_path / "bad.mat"
        path.write_bytes(b"2 2\n\xff\xfe\n01\n")
        with pytest.raises(MatrixParseError, match="not UTF-8"):
            read_bool_matrix_file(str(path))

    def test_read_blocks(self, write_file):
        blocks = read_blocks_file(write_file("blocks.txt", "1 1\n1\n\n1 1\n0\n"))
        assert [b.to_strings() for b in blocks] == [["1"], ["0"]]
