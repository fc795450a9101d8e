"""Deterministic CSV/JSON output of trajectories and reports.

Floats are always written with 17 significant digits, which round-trips
IEEE doubles exactly. Nothing time-dependent goes into the output; runs
are identified by an explicit label in the metadata.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

from .meanfield import Trajectory

FORMATS = ("csv", "json")
TRAJECTORY_COLUMNS = ("t", "theta", "phi", "gamma", "xi", "p1", "p2")


@dataclass
class Table:
    columns: list[str]
    rows: list[list] = field(default_factory=list)
    meta: dict = field(default_factory=dict)


def format_float(x: float) -> str:
    return format(float(x), ".17g")


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format_float(v)
    return str(v)


def _json_value(v) -> str:
    if isinstance(v, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_json_value(x)}" for k, x in v.items()) + "}"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_json_value(x) for x in v) + "]"
    if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
        return json.dumps(v)
    if isinstance(v, float):
        return format_float(v) if math.isfinite(v) else "null"
    # numpy scalars and anything else float-like
    return _json_value(float(v))


def trajectory_table(traj: Trajectory, meta: dict | None = None) -> Table:
    rows = [
        [float(t), *(float(x) for x in angles), traj.occupations.p1, traj.occupations.p2]
        for t, angles in zip(traj.times, traj.angles)
    ]
    info = {"method": traj.method}
    if traj.params is not None:
        info["params"] = {
            "hbar_omega": traj.params.hbar_omega,
            "u": traj.params.u,
            "gb_b": traj.params.gb_b,
        }
    info.update(meta or {})
    return Table(list(TRAJECTORY_COLUMNS), rows, info)


def serialize(obj: Table | Trajectory, fmt: str) -> bytes:
    """Encode ``obj`` as UTF-8 CSV (header row first, LF endings) or JSON."""
    if fmt not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}, got {fmt!r}")
    table = trajectory_table(obj) if isinstance(obj, Trajectory) else obj
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(table.columns)
        for row in table.rows:
            writer.writerow([_cell(v) for v in row])
        return buf.getvalue().encode("utf-8")
    text = (
        "{"
        f'"meta": {_json_value(table.meta)}, '
        f'"columns": {_json_value(list(table.columns))}, '
        f'"rows": {_json_value([list(r) for r in table.rows])}'
        "}\n"
    )
    return text.encode("utf-8")


def parse_json(data: bytes) -> Table:
    obj = json.loads(data.decode("utf-8"))
    return Table(obj["columns"], obj["rows"], obj["meta"])
