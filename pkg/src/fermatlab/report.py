"""Flat report records shared by every CLI command.

One record per modulus, one JSON object per line; the CSV mirror carries the
same columns.  Fields that a command does not produce stay null so records
from different commands diff cleanly against each other.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

SCHEMA_VERSION = "1"

FIELDS = (
    "schema_version",
    "command",
    "n",
    "bits",
    "verdict_pepin",
    "verdict_paper",
    "found_q",
    "window_lo",
    "window_hi",
    "squarings_pepin",
    "squarings_scan",
    "factor",
    "cofactor",
    "consistent",
    "elapsed_ms",
    "trace_hash",
)


@dataclass
class ReportRecord:
    command: str
    n: int
    bits: int
    verdict_pepin: str | None = None
    verdict_paper: str | None = None
    found_q: int | None = None
    window_lo: int | None = None
    window_hi: int | None = None
    squarings_pepin: int | None = None
    squarings_scan: int | None = None
    factor: int | None = None
    cofactor: int | None = None
    consistent: bool | None = None
    elapsed_ms: float | None = None
    trace_hash: str | None = None
    schema_version: str = SCHEMA_VERSION

    def to_mapping(self) -> dict[str, object]:
        return {name: getattr(self, name) for name in FIELDS}

    def to_json(self) -> str:
        return json.dumps(self.to_mapping())

    @classmethod
    def from_json(cls, line: str) -> "ReportRecord":
        data = json.loads(line)
        unknown = set(data) - set(FIELDS)
        if unknown:
            raise ValueError(f"unknown report fields: {sorted(unknown)}")
        return cls(**data)


def _csv_cell(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def render_csv(records: list[ReportRecord]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(FIELDS)
    for record in records:
        writer.writerow([_csv_cell(record.to_mapping()[name]) for name in FIELDS])
    return buffer.getvalue()


def render_json_lines(records: list[ReportRecord]) -> str:
    return "".join(record.to_json() + "\n" for record in records)


def _table_cell(value: object) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return f"{value:.2f}"
    return str(value)


def render_table(headers: list[str], rows: list[list[object]]) -> str:
    cells = [[_table_cell(value) for value in row] for row in rows]
    widths = [
        max(len(header), *(len(row[i]) for row in cells)) if cells else len(header)
        for i, header in enumerate(headers)
    ]
    numeric = [
        all(isinstance(row[i], (int, float)) or row[i] is None for row in rows)
        for i in range(len(headers))
    ]

    def fit(text: str, i: int) -> str:
        return text.rjust(widths[i]) if numeric[i] else text.ljust(widths[i])

    lines = ["  ".join(fit(header, i) for i, header in enumerate(headers)).rstrip()]
    lines.append("  ".join("-" * width for width in widths))
    for row in cells:
        lines.append("  ".join(fit(cell, i) for i, cell in enumerate(row)).rstrip())
    return "\n".join(lines) + "\n"


def records_table(records: list[ReportRecord]) -> str:
    """Fixed-width table of the schema columns a command actually filled."""
    mappings = [record.to_mapping() for record in records]
    headers = [
        name
        for name in FIELDS
        if name not in ("schema_version", "command")
        and any(mapping[name] is not None for mapping in mappings)
    ]
    rows = [[mapping[name] for name in headers] for mapping in mappings]
    return render_table(headers, rows)
