"""Experiment record files: JSON lines for records, CSV for tables.

Outputs are replayable artifacts: floats are serialized with shortest
round-trip repr, key order is fixed, and nothing time- or host-dependent is
ever written, so identical configurations produce byte-identical files.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable

import numpy as np


def _json_default(value):
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError(f"not JSON serializable: {type(value).__name__}")


def jsonl_dumps(records: Iterable[dict]) -> str:
    return "".join(
        json.dumps(r, sort_keys=True, default=_json_default) + "\n" for r in records
    )


def write_jsonl(path, records: Iterable[dict]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(jsonl_dumps(records))


def read_jsonl(path) -> list[dict]:
    with open(path, encoding="utf-8") as fh:
        return [json.loads(line) for line in fh if line.strip()]


def csv_dumps(fieldnames: list[str], rows: Iterable[dict], header_comment: str | None = None) -> str:
    buf = io.StringIO()
    if header_comment is not None:
        buf.write(f"# {header_comment}\n")
    writer = csv.DictWriter(buf, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _cell(row.get(k)) for k in fieldnames})
    return buf.getvalue()


def write_csv(path, fieldnames: list[str], rows: Iterable[dict], header_comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(csv_dumps(fieldnames, rows, header_comment))


def _cell(value):
    if isinstance(value, float):  # covers np.float64, which subclasses float
        return repr(float(value))
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)
    return value
