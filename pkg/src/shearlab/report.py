"""JSON and CSV serialization of analysis results.

Floats are written with repr(), i.e. the shortest decimal string that
round-trips to the same double, so identical runs give byte-identical output.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import json
import math

import numpy as np

CSV_HEADER_LINE = "# shearlab-csv v1"


def _public_properties(obj) -> dict:
    out = {}
    for name in dir(type(obj)):
        if name.startswith("_"):
            continue
        if isinstance(getattr(type(obj), name, None), property):
            out[name] = getattr(obj, name)
    return out


def to_jsonable(obj):
    """Convert dataclasses, NamedTuples and numpy values into plain JSON types.

    Dataclass properties (verdicts such as ``passed``) are included next to
    the fields. Non-finite floats become null.
    """
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        return x if math.isfinite(x) else None
    if isinstance(obj, np.ndarray):
        return [to_jsonable(v) for v in obj.tolist()]
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        d = {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
        for k, v in _public_properties(obj).items():
            d.setdefault(k, to_jsonable(v))
        return d
    if isinstance(obj, tuple) and hasattr(obj, "_fields"):
        return {k: to_jsonable(v) for k, v in obj._asdict().items()}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if callable(obj):
        return getattr(obj, "__name__", repr(obj))
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps_json(obj) -> str:
    return json.dumps(to_jsonable(obj), indent=2, sort_keys=True, allow_nan=False) + "\n"


def format_cell(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def dumps_csv(columns, rows) -> str:
    buf = io.StringIO()
    buf.write(CSV_HEADER_LINE + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_cell(v) for v in row])
    return buf.getvalue()


def read_csv(text: str) -> tuple[list, list]:
    """Inverse of dumps_csv, returning (columns, rows of strings)."""
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    reader = csv.reader(lines)
    columns = next(reader)
    return columns, list(reader)
