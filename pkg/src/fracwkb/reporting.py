"""Verification records and deterministic table/CSV/JSON rendering.

All floats are rendered with 17 significant digits so a fixed
configuration always produces byte-identical output.  JSON cannot carry
infinities, so non-finite values appear there as the strings "inf",
"-inf" or "nan"; CSV and tables print them directly.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Sequence

__all__ = [
    "ReportRecord",
    "format_float",
    "format_table",
    "format_csv",
    "format_json",
]

SCHEMA_VERSION = "1"

# Informational rows (per-node derivative dumps) use an infinite
# tolerance: they are data, not pass/fail checks, and never gate the
# exit code.
INFORMATIONAL = math.inf


@dataclass(frozen=True)
class ReportRecord:
    """One checked quantity: analytic target, numeric value, tolerance."""

    quantity: str
    analytic: float
    numeric: float
    tolerance: float

    def __post_init__(self) -> None:
        if "," in self.quantity or "\n" in self.quantity:
            raise ValueError(f"quantity name must be CSV-safe, got {self.quantity!r}")

    @property
    def residual(self) -> float:
        return abs(self.analytic - self.numeric)

    @property
    def passed(self) -> bool:
        # informational rows never gate, even when the residual is nan
        # (both values infinite, e.g. a divergent endpoint)
        if math.isinf(self.tolerance):
            return True
        return self.residual <= self.tolerance


def format_float(x: float) -> str:
    return f"{x:.17g}"


Rows = Sequence[ReportRecord] | Sequence[tuple[float, ReportRecord]]


def _normalize(rows: Rows, sweep_param: str | None) -> list[tuple[tuple[str, ...], ReportRecord]]:
    out = []
    for row in rows:
        if sweep_param is None:
            record = row
            prefix: tuple[str, ...] = ()
        else:
            value, record = row
            prefix = (format_float(value),)
        out.append((prefix, record))
    return out


def _cells(record: ReportRecord) -> tuple[str, ...]:
    return (
        record.quantity,
        format_float(record.analytic),
        format_float(record.numeric),
        format_float(record.residual),
        format_float(record.tolerance),
        "true" if record.passed else "false",
    )


_HEADER = ("quantity", "analytic", "numeric", "residual", "tolerance", "pass")


def format_table(rows: Rows, sweep_param: str | None = None) -> str:
    header = ((sweep_param,) if sweep_param else ()) + _HEADER
    body = [prefix + _cells(record) for prefix, record in _normalize(rows, sweep_param)]
    widths = [len(h) for h in header]
    for cells in body:
        widths = [max(w, len(c)) for w, c in zip(widths, cells)]
    lines = [
        "  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip(),
        "  ".join("-" * w for w in widths),
    ]
    for cells in body:
        # quantity column left-justified, numeric columns right-justified
        padded = [cells[0].ljust(widths[0])] + [
            c.rjust(w) for c, w in zip(cells[1:], widths[1:])
        ]
        lines.append("  ".join(padded).rstrip())
    return "\n".join(lines) + "\n"


def format_csv(rows: Rows, sweep_param: str | None = None) -> str:
    header = ((sweep_param,) if sweep_param else ()) + _HEADER
    lines = [f"# schema_version={SCHEMA_VERSION}", ",".join(header)]
    for prefix, record in _normalize(rows, sweep_param):
        lines.append(",".join(prefix + _cells(record)))
    return "\n".join(lines) + "\n"


def _json_number(x: float) -> str:
    if math.isfinite(x):
        return format_float(x)
    return json.dumps(format_float(x))


def format_json(rows: Rows, sweep_param: str | None = None) -> str:
    objects = []
    for prefix, record in _normalize(rows, sweep_param):
        pairs = [f'"schema_version": {json.dumps(SCHEMA_VERSION)}']
        if sweep_param is not None:
            pairs.append(f"{json.dumps(sweep_param)}: {prefix[0]}")
        pairs.extend(
            [
                f'"quantity": {json.dumps(record.quantity)}',
                f'"analytic": {_json_number(record.analytic)}',
                f'"numeric": {_json_number(record.numeric)}',
                f'"residual": {_json_number(record.residual)}',
                f'"tolerance": {_json_number(record.tolerance)}',
                f'"pass": {"true" if record.passed else "false"}',
            ]
        )
        objects.append("  {" + ", ".join(pairs) + "}")
    if not objects:
        return "[]\n"
    return "[\n" + ",\n".join(objects) + "\n]\n"
