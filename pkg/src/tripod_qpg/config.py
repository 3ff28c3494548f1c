#!/usr/bin/env python3
"""
Config - named parameter presets and JSON config loading
"""

# Standard library imports
import json
import logging
from pathlib import Path
from typing import Any, Dict

from pydantic import ValidationError

from .constants import CONFIG_FIELD_ERROR, CONFIG_PARSE_ERROR, CONFIG_READ_ERROR, UNKNOWN_PRESET
from .errors import ConfigError
from .models import TripodParams

logger = logging.getLogger(__name__)

# =============================================================================
# PRESETS
# =============================================================================

PRESETS: Dict[str, Dict[str, Any]] = {
    # single-photon gate in a cold sample
    "quantum": {
        "omega_p": 0.1,
        "omega_t": 0.1,
        "omega_c": 1.0,
        "delta1": 20.01,
        "delta2": 20.0,
        "delta3": 20.02,
        "gamma_kj": [0.01, 0.01, 0.01],
        "density": 3.0e19,
        "length": 1.6e-3,
    },
    # classical gate with intense probe and trigger pulses
    "classical": {
        "omega_p": 1.0,
        "omega_t": 1.0,
        "omega_c": 4.5,
        "delta1": 10.01,
        "delta2": 10.0,
        "delta3": 10.02,
        "gamma_kj": [0.01, 0.01, 0.01],
        "density": 3.0e18,
        "length": 7.0e-3,
    },
    # classical fields in a 2.5 cm vapour cell, density to be solved for
    "gas_cell": {
        "omega_p": 1.0,
        "omega_t": 1.0,
        "omega_c": 4.5,
        "delta1": 10.01,
        "delta2": 10.0,
        "delta3": 10.02,
        "gamma_kj": [0.01, 0.01, 0.01],
        "density": 3.0e18,
        "length": 2.5e-2,
    },
}


def _validated(document: Dict[str, Any], origin: str) -> TripodParams:
    try:
        return TripodParams.model_validate(document)
    except ValidationError as exc:
        problems = "; ".join(
            f"{'.'.join(str(part) for part in error['loc']) or '<root>'}: {error['msg']}"
            for error in exc.errors()
        )
        raise ConfigError(f"{CONFIG_FIELD_ERROR} in {origin}: {problems}") from exc


def preset(name: str) -> TripodParams:
    if name not in PRESETS:
        raise ConfigError(f"{UNKNOWN_PRESET}: {name!r} (choose from {', '.join(PRESETS)})")
    return _validated(PRESETS[name], f"preset {name!r}")


def load_params(path: Path) -> TripodParams:
    """Read a JSON document whose keys are TripodParams field names"""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"{CONFIG_READ_ERROR}: {path}: {exc.strerror}") from exc
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(
            f"{CONFIG_PARSE_ERROR}: {path}: line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(document, dict):
        raise ConfigError(f"{CONFIG_PARSE_ERROR}: {path}: top level must be an object")
    logger.debug("loaded config %s with keys %s", path, sorted(document))
    return _validated(document, str(path))
