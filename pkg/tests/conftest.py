"""
Shared fixtures: the named presets and a few hand-built parameter points
"""

import json
import logging

import pytest

from tripod_qpg.config import preset
from tripod_qpg.models import TripodParams


@pytest.fixture(autouse=True)
def reset_logging():
    """Drop the stderr handler main() installs so later tests do not write to a closed stream"""
    yield
    root = logging.getLogger()
    for handler in root.handlers[:]:
        if type(handler) is logging.StreamHandler:
            root.removeHandler(handler)
    root.setLevel(logging.WARNING)


@pytest.fixture
def quantum() -> TripodParams:
    return preset("quantum")


@pytest.fixture
def classical() -> TripodParams:
    return preset("classical")


@pytest.fixture
def gas_cell() -> TripodParams:
    return preset("gas_cell")


@pytest.fixture
def dark_probe(quantum) -> TripodParams:
    """Probe and coupling on exact two-photon resonance with no ground dephasing"""
    return quantum.replace(delta1=20.0, gamma_kj=(0.0, 0.01, 0.01))


@pytest.fixture
def write_config(tmp_path):
    """Write a JSON config document and return its path"""

    def write(document, name="config.json"):
        path = tmp_path / name
        text = document if isinstance(document, str) else json.dumps(document)
        path.write_text(text, encoding="utf-8")
        return path

    return write
