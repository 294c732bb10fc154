"""Long-format CSV for index panels and trajectories.

Trajectory files have the columns
``scenario, stance, seed, t, index_name, param, value, error_flag``; floats
are written with ``repr`` so a read-back is exact and reruns are
byte-identical.
"""

from __future__ import annotations

import csv
import io
import math
from pathlib import Path
from typing import Iterable

from epifair.audit import Stance, Trajectory
from epifair.errors import ParseError
from epifair.indices import IndexPanel

TRAJECTORY_COLUMNS = ("scenario", "stance", "seed", "t", "index_name", "param", "value", "error_flag")
PANEL_COLUMNS = ("index_name", "param", "value", "error_flag")


def _fmt(value: float) -> str:
    return "nan" if math.isnan(value) else repr(float(value))


def panel_to_csv(panel: IndexPanel) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(PANEL_COLUMNS)
    for name, param, value, err in panel.rows():
        writer.writerow((name, param, _fmt(value), err))
    return buf.getvalue()


def trajectory_to_csv(tr: Trajectory) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(TRAJECTORY_COLUMNS)
    stance = Stance(tr.stance).value
    for t, panel in tr.panels:
        for name, param, value, err in panel.rows():
            writer.writerow((tr.scenario, stance, tr.seed, t, name, param, _fmt(value), err))
    return buf.getvalue()


def trajectory_filename(tr: Trajectory) -> str:
    return f"{tr.scenario}_{Stance(tr.stance).value}_seed{tr.seed}.csv"


def write_trajectory(tr: Trajectory, directory: str | Path) -> Path:
    path = Path(directory) / trajectory_filename(tr)
    path.write_text(trajectory_to_csv(tr))
    return path


def read_trajectory_rows(paths: Iterable[str | Path]) -> list[dict]:
    """Parse trajectory CSVs into row dicts with typed ``seed``, ``t``, ``value``."""
    rows = []
    for path in paths:
        with open(path, newline="") as fh:
            reader = csv.DictReader(fh)
            if tuple(reader.fieldnames or ()) != TRAJECTORY_COLUMNS:
                raise ParseError(f"{path}: expected columns {','.join(TRAJECTORY_COLUMNS)}")
            for row in reader:
                try:
                    row["seed"] = int(row["seed"])
                    row["t"] = int(row["t"])
                    row["value"] = float(row["value"])
                except ValueError as exc:
                    raise ParseError(f"{path}: {exc}") from None
                rows.append(row)
    return rows


def series_key(index_name: str, param: str) -> str:
    return f"{index_name}[{param}]" if param else index_name
