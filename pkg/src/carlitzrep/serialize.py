"""Deterministic JSON conversion of library values."""

from __future__ import annotations

import json
import math
from dataclasses import asdict, is_dataclass
from fractions import Fraction

SCHEMA_VERSION = "carlitzrep.report/1"


def jsonable(x):
    """Convert nested library values into plain JSON data (stable key order)."""
    if x is None or isinstance(x, (bool, str)):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, float):
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return x
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if hasattr(x, "to_json"):
        return jsonable(x.to_json())
    if hasattr(x, "status") and hasattr(x, "certificate"):
        return {"status": x.status, "certificate": jsonable(x.certificate)}
    if is_dataclass(x):
        return jsonable(asdict(x))
    if hasattr(x, "tolist"):
        return x.tolist()
    return repr(x)


def dumps(x, indent=2) -> str:
    return json.dumps(jsonable(x), indent=indent, sort_keys=True)
