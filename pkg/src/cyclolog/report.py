"""CSV and JSON emitters with a fixed significant-digit policy."""

from __future__ import annotations

import csv
import io
import json
import math

import numpy as np

DEFAULT_PRECISION = 6
MAX_PRECISION = 17


def round_sig(x: float, precision: int) -> float:
    if not math.isfinite(x):
        raise ValueError(f"refusing to emit non-finite value {x!r}")
    return float(f"{x:.{precision}g}")


def format_value(value, precision: int = DEFAULT_PRECISION) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return repr(round_sig(float(value), precision))
    if value is None:
        return ""
    return str(value)


def _prepare(obj, precision: int):
    if isinstance(obj, dict):
        return {str(k): _prepare(v, precision) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_prepare(v, precision) for v in obj]
    if isinstance(obj, np.ndarray):
        return _prepare(obj.tolist(), precision)
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return round_sig(float(obj), precision)
    return obj


def to_json(obj, precision: int = DEFAULT_PRECISION) -> str:
    return json.dumps(_prepare(obj, precision), indent=2, allow_nan=False) + "\n"


def to_csv(header: list[str], rows, precision: int = DEFAULT_PRECISION) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_value(v, precision) for v in row])
    return buf.getvalue()


def pack_mapping(mapping: dict, precision: int = DEFAULT_PRECISION) -> str:
    """Flatten a small dict into one CSV cell as ``k=v;k=v``."""
    return ";".join(f"{k}={format_value(v, precision)}" for k, v in mapping.items())


def unpack_mapping(cell: str) -> dict[str, str]:
    if not cell:
        return {}
    return dict(part.split("=", 1) for part in cell.split(";"))
