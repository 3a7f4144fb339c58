"""Depletion CSV (`power_W,efficiency`) reader and fit report writer."""

from __future__ import annotations

import csv
from pathlib import Path

from pydantic import ValidationError

from qpg_toolkit.errors import ParseError
from qpg_toolkit.model.efficiency import EfficiencyPoint

HEADER = ("power_W", "efficiency")


def parse_depletion_csv(text: str, source: str = "<string>") -> list[EfficiencyPoint]:
    points: list[EfficiencyPoint] = []
    for lineno, row in enumerate(csv.reader(text.splitlines()), start=1):
        if not row or row[0].startswith("#"):
            continue
        if lineno == 1 and tuple(c.strip() for c in row) == HEADER:
            continue
        if len(row) != 2:
            raise ParseError(source, lineno, f"expected 2 columns, got {len(row)}")
        try:
            points.append(EfficiencyPoint(power_w=float(row[0]), efficiency=float(row[1])))
        except ValueError as exc:
            # ValidationError is a ValueError
            bad = isinstance(exc, ValidationError)
            reason = "out-of-range value" if bad else "non-numeric value"
            raise ParseError(source, lineno, f"{reason} in {row!r}") from None
    if not points:
        raise ParseError(source, 1, "no data rows")
    return points


def read_depletion_csv(path: str | Path) -> list[EfficiencyPoint]:
    p = Path(path)
    return parse_depletion_csv(p.read_text(), source=str(p))


def format_depletion_csv(points: list[EfficiencyPoint]) -> str:
    lines = [",".join(HEADER)]
    lines += [f"{p.power_w:.17g},{p.efficiency:.17g}" for p in points]
    return "\n".join(lines) + "\n"
