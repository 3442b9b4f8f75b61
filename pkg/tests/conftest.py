"""
Pytest configuration and shared fixtures
"""

import logging
import tempfile

import pytest

import cobweb_lab.utils.logger as logger_module
from cobweb_lab.cobweb import dibiclique
from cobweb_lab.models.config import VerifyConfig
from cobweb_lab.models.matrix import BoolMatrix


@pytest.fixture(autouse=True)
def reset_logger():
    """Each test starts with an unconfigured 'cobweb-lab' logger."""
    yield
    parent = logging.getLogger("cobweb-lab")
    for handler in logger_module.own_handlers():
        parent.removeHandler(handler)
        handler.close()
    logger_module._LOGGER_INITIALIZED = False


@pytest.fixture
def temp_output_dir():
    """Create a temporary output directory"""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield tmpdir


@pytest.fixture
def cut_block():
    """The di-biclique K(2,3) block with arcs (0,1) and (1,2) removed."""
    return BoolMatrix(["101", "110"])


@pytest.fixture
def biclique_chain():
    return dibiclique(2, 3)


@pytest.fixture
def small_verify_config():
    """A verification config that finishes in well under a second."""
    return VerifyConfig(
        max_n=4,
        identity_max_n=6,
        max_product=8,
        relations_total_max_n=3,
        complete_cobwebs_max_n=4,
        ferrers_sweep_max_levels=3,
        ferrers_sweep_max_size=3,
        ferrers_exhaustive_max_dim=2,
        random_chains=20,
        chain_max_levels=4,
        chain_max_size=3,
        closure_samples=20,
        closure_max_dim=6,
        exp_pairs=5,
        exp_dim=2,
        zeta_pairs=10,
        zeta_max_dim=4,
    )


@pytest.fixture
def write_file(tmp_path):
    """Write text to a file under tmp_path and return its path."""

    def _write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write
