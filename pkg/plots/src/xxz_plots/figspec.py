"""CSV contract reader and figure specification."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path

CSV_VERSION = "# xxz-overlap v1"

NUMERIC = {"L", "zeta", "h_plus", "h1_minus", "h2_minus", "s_ed", "s_finite",
           "s_product", "s_thermo", "residual_max", "wall_time_ms"}


class SchemaError(RuntimeError):
    """CSV does not match the versioned contract; message carries the diff."""


@dataclass
class FigureSpec:
    csv_path: str
    out_path: str
    x_column: str = "h2_minus"
    series: tuple = ("s_ed", "s_thermo")
    vlines: tuple = ()          # extra dashed guides; critical fields added
    title: str = ""
    xlabel: str = ""
    ylabel: str = "overlap"
    style: str | None = None    # optional rcParams JSON profile


def load_rows(csv_path: str, required: tuple = ()) -> list[dict]:
    """Parse a contract CSV into typed rows; error rows keep their message."""
    text = Path(csv_path).read_text().strip().split("\n")
    if not text or text[0].strip() != CSV_VERSION:
        raise SchemaError(f"{csv_path}: missing version header {CSV_VERSION!r}")
    header = text[1].split(",")
    missing = [c for c in required if c not in header]
    if missing:
        raise SchemaError(
            f"{csv_path}: columns {missing} not in header {header}")
    rows = []
    for rec in csv.DictReader(text[2:], fieldnames=header):
        row = {}
        for key, val in rec.items():
            if key in NUMERIC:
                row[key] = float(val) if val not in (None, "") else math.nan
            else:
                row[key] = val or ""
        rows.append(row)
    return rows


def clean_series(rows: list[dict], x: str, y: str) -> tuple[list, list]:
    """(x, y) pairs with error rows and missing values dropped."""
    xs, ys = [], []
    for row in rows:
        if row.get("error"):
            continue
        if math.isnan(row.get(x, math.nan)) or math.isnan(row.get(y, math.nan)):
            continue
        xs.append(row[x])
        ys.append(row[y])
    return xs, ys
