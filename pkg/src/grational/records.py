"""Tabular output records and their CSV / JSON serialization."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

SCHEMAS = ("eval_table", "coeff_table", "error_table", "check_report")


def format_value(v):
    """Text form used in CSV: canonical fractions, shortest round-trip floats."""
    if isinstance(v, bool):
        return str(int(v))
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _json_value(v):
    if isinstance(v, bool):
        return int(v)
    if isinstance(v, Fraction):
        return str(v) if v.denominator != 1 else v.numerator
    return v


@dataclass
class OutputRecord:
    schema: str
    columns: tuple
    rows: list = field(default_factory=list)

    def __post_init__(self):
        if self.schema not in SCHEMAS:
            raise ValueError(f"unknown schema {self.schema!r}")

    def add(self, *row):
        if len(row) != len(self.columns):
            raise ValueError(f"{self.schema} rows need {len(self.columns)} columns, got {len(row)}")
        for v in row[1:]:
            if isinstance(v, float) and not math.isfinite(v):
                raise ValueError(f"non-finite value in {self.schema} row {row[0]!r}")
        self.rows.append(tuple(row))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.columns)
        for row in self.rows:
            w.writerow([format_value(v) for v in row])
        return buf.getvalue()

    def to_json_obj(self) -> dict:
        return {
            "schema": self.schema,
            "columns": list(self.columns),
            "rows": [{c: _json_value(v) for c, v in zip(self.columns, row)} for row in self.rows],
        }


def render(records, fmt: str) -> str:
    """Serialize one or more records; several CSV tables are separated by a blank line."""
    if isinstance(records, OutputRecord):
        records = [records]
    if fmt == "csv":
        return "\n".join(r.to_csv() for r in records)
    if fmt == "json":
        objs = [r.to_json_obj() for r in records]
        return json.dumps(objs[0] if len(objs) == 1 else objs, indent=2) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
