import json
from collections.abc import Sequence
from typing import Any, Dict, List, Optional, Union

import yaml

from cobweb_lab.models.chain import CobwebChain
from cobweb_lab.models.config import ConfigFile
from cobweb_lab.models.custom_errors import ArgumentError, MatrixParseError
from cobweb_lab.models.matrix import BoolMatrix, RealMatrix
from cobweb_lab.utils.formats import (
    format_chain,
    parse_blocks,
    parse_bool_matrix,
    parse_chain,
    parse_real_matrix,
)
from cobweb_lab.utils.logger import get_logger

logger = get_logger(__name__)


def _apply_param(config: Dict[str, Any], param: str):
    """
    Apply one key=value override. A bare key addresses the verify section;
    dotted keys address nested sections. Values are parsed as YAML scalars.
    """
    if "=" not in param:
        raise ArgumentError(f"parameter '{param}' is not in key=value format")
    key, value = param.split("=", 1)
    path = key.strip().split(".")
    if len(path) == 1:
        path = ["verify"] + path
    node = config
    for part in path[:-1]:
        child = node.get(part)
        if not isinstance(child, dict):
            child = {}
            node[part] = child
        node = child
    node[path[-1]] = yaml.safe_load(value) if value.strip() else None


def read_config_from_file(
    file_path: Optional[str] = None,
    param: Union[Sequence[str], None] = None,
) -> ConfigFile:
    """Read config file from local
    Args:
        file_path: Path to a YAML config file, or None for the defaults
        param: Additional parameters in key=value format.
    Returns:
        ConfigFile: Config file object
    """
    config: Any = {}
    if file_path:
        try:
            config = yaml.safe_load(_read_text(file_path))
        except yaml.YAMLError as err:
            raise MatrixParseError(f"config file {file_path} is not valid YAML: {err}")
        if config is None:
            config = {}
        if not isinstance(config, dict):
            raise MatrixParseError(
                f"Config file {file_path} must be a mapping (dictionary), "
                f"but found {type(config).__name__}."
            )

    for p in param or ():
        _apply_param(config, p)

    return ConfigFile.model_validate(config)


def save_data_to_file(data: Union[Dict, List], file_path: str):
    format = file_path.split(".")[-1].lower()
    if format in ("yaml", "yml"):
        with open(file_path, "w", encoding="utf-8") as f:
            yaml.safe_dump(data, f, sort_keys=False)
    elif format == "json":
        with open(file_path, "w", encoding="utf-8") as f:
            json.dump(data, f, indent=4)
    else:
        raise ArgumentError(f"Unsupported format: {format}")
    logger.info("Saved %s", file_path)


def _read_text(file_path: str) -> str:
    try:
        with open(file_path, "r", encoding="utf-8") as f:
            return f.read()
    except UnicodeDecodeError as err:
        raise MatrixParseError(f"{file_path} is not UTF-8 text: {err}")


def read_bool_matrix_file(file_path: str) -> BoolMatrix:
    return parse_bool_matrix(_read_text(file_path))


def read_real_matrix_file(file_path: str) -> RealMatrix:
    return parse_real_matrix(_read_text(file_path))


def read_chain_file(file_path: str) -> CobwebChain:
    return parse_chain(_read_text(file_path))


def write_chain_file(c: CobwebChain, file_path: str):
    with open(file_path, "w", encoding="utf-8") as f:
        f.write(format_chain(c))


def read_blocks_file(file_path: str) -> List[BoolMatrix]:
    return parse_blocks(_read_text(file_path))
