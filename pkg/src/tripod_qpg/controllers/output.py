#!/usr/bin/env python3
"""
Output rendering - text, JSON and CSV views of command results

A command result is either a flat record (dict) or a table (DataFrame).
Floats are printed with a fixed number of significant digits so repeated
runs are byte-identical.
"""

import io
import json
import math
from pathlib import Path
from typing import Any, Dict, Optional, Union

import numpy as np
import pandas as pd

from ..constants import FLOAT_FORMAT, SIGNIFICANT_DIGITS

Payload = Union[Dict[str, Any], pd.DataFrame]


def flatten(record: Dict[str, Any]) -> Dict[str, Any]:
    """Split complex values into paired _re/_im entries"""
    flat: Dict[str, Any] = {}
    for key, value in record.items():
        if isinstance(value, (complex, np.complexfloating)):
            flat[f"{key}_re"] = float(value.real)
            flat[f"{key}_im"] = float(value.imag)
        else:
            flat[key] = value
    return flat


def _plain(value: Any) -> Any:
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value):
            return None
        # -0.0 prints as 0
        return float(f"{value + 0.0:.{SIGNIFICANT_DIGITS}g}")
    return value


def _text_value(value: Any) -> str:
    value = _plain(value)
    if value is None:
        return "nan"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.{SIGNIFICANT_DIGITS}g}"
    return str(value)


# =============================================================================
# RENDERERS
# =============================================================================

def render_text(payload: Payload) -> str:
    if isinstance(payload, pd.DataFrame):
        return payload.to_string(index=False, formatters={
            column: _text_value for column in payload.columns
        }) + "\n"
    width = max((len(key) for key in payload), default=0)
    return "".join(f"{key:<{width}}  {_text_value(value)}\n" for key, value in payload.items())


def render_json(payload: Payload) -> str:
    if isinstance(payload, pd.DataFrame):
        document: Any = [
            {key: _plain(value) for key, value in row.items()}
            for row in payload.to_dict(orient="records")
        ]
    else:
        document = {key: _plain(value) for key, value in payload.items()}
    return json.dumps(document, indent=2) + "\n"


def render_csv(payload: Payload) -> str:
    if not isinstance(payload, pd.DataFrame):
        payload = pd.DataFrame(
            {"field": list(payload), "value": [_text_value(v) for v in payload.values()]}
        )
    buffer = io.StringIO()
    payload.to_csv(buffer, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    return buffer.getvalue()


RENDERERS = {"text": render_text, "json": render_json, "csv": render_csv}


def render(payload: Payload, output_format: str) -> str:
    return RENDERERS[output_format](payload)


def write_output(text: str, out: Optional[Path], stream) -> None:
    if out is None:
        stream.write(text)
        return
    Path(out).write_text(text, encoding="utf-8")
