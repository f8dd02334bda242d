"""Deterministic rendering of data-interchange documents.

Floating-point values are printed at 17 significant digits so emitted
documents round-trip exactly; rendering is byte-stable across runs.
"""

from __future__ import annotations

import json
import math

import numpy as np

__all__ = ["render_json"]


def _scalar(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if not math.isfinite(value):
            raise ValueError(f"cannot serialize non-finite value {value!r}")
        return format(value, ".17g")
    if isinstance(value, str):
        return json.dumps(value)
    if value is None:
        return "null"
    raise TypeError(f"cannot serialize {type(value).__name__} value {value!r}")


def _render(value, level: int) -> str:
    pad = "  " * level
    if isinstance(value, dict):
        if not value:
            return "{}"
        inner = ",\n".join(
            f"{pad}  {json.dumps(str(key))}: {_render(item, level + 1)}"
            for key, item in value.items()
        )
        return "{\n" + inner + "\n" + pad + "}"
    if isinstance(value, (list, tuple, np.ndarray)):
        items = list(value)
        if not items:
            return "[]"
        if all(not isinstance(x, (dict, list, tuple, np.ndarray)) for x in items):
            return "[" + ", ".join(_scalar(x) for x in items) + "]"
        inner = ",\n".join(f"{pad}  {_render(x, level + 1)}" for x in items)
        return "[\n" + inner + "\n" + pad + "]"
    return _scalar(value)


def render_json(value) -> str:
    """Render a document as JSON text with a trailing newline."""
    return _render(value, 0) + "\n"
