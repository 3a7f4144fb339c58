"""Spectrum CSV I/O.

    # axis=wavelength unit=nm temperature_C=200 resolution_sigma=0
    axis,intensity
    1549.5,0.0012
    ...

Values are written with 17 significant digits so files round-trip exactly.
"""

from __future__ import annotations

import csv
import io
from pathlib import Path
from typing import cast, get_args

import numpy as np

from qpg_toolkit.errors import ParseError
from qpg_toolkit.model.spectrum import AXIS_UNITS, AxisKind, Spectrum, SpectrumMetadata


def _num(value: float) -> str:
    return f"{value:.17g}"


def format_spectrum_csv(spectrum: Spectrum) -> str:
    meta = spectrum.metadata
    temp = "none" if meta.temperature_c is None else _num(meta.temperature_c)
    buf = io.StringIO()
    buf.write(
        f"# axis={spectrum.axis_kind} unit={spectrum.unit} temperature_C={temp} "
        f"resolution_sigma={_num(meta.resolution_sigma)}\n"
    )
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["axis", "intensity"])
    for x, y in zip(spectrum.axis, spectrum.intensity):
        writer.writerow([_num(float(x)), _num(float(y))])
    return buf.getvalue()


def write_spectrum_csv(spectrum: Spectrum, path: str | Path) -> None:
    Path(path).write_text(format_spectrum_csv(spectrum))


def _parse_header(line: str, source: str) -> tuple[AxisKind, SpectrumMetadata]:
    fields: dict[str, str] = {}
    for token in line.lstrip("#").split():
        key, sep, value = token.partition("=")
        if not sep:
            raise ParseError(source, 1, f"header token {token!r} is not key=value")
        fields[key] = value
    kind = fields.get("axis", "")
    if kind not in get_args(AxisKind):
        raise ParseError(source, 1, f"unknown axis kind {kind!r}")
    unit = fields.get("unit")
    if unit is not None and unit != AXIS_UNITS[kind]:
        raise ParseError(source, 1, f"unit {unit!r} does not match axis kind {kind!r}")
    try:
        temp_raw = fields.get("temperature_C", "none")
        temperature = None if temp_raw in ("none", "") else float(temp_raw)
        resolution = float(fields.get("resolution_sigma", "0"))
    except ValueError as exc:
        raise ParseError(source, 1, f"bad header value: {exc}") from exc
    meta = SpectrumMetadata(temperature_c=temperature, resolution_sigma=resolution)
    return cast(AxisKind, kind), meta


def parse_spectrum_csv(text: str, source: str = "<string>") -> Spectrum:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("#"):
        raise ParseError(source, 1, "missing '# axis=... unit=...' header line")
    kind, meta = _parse_header(lines[0], source)
    axis: list[float] = []
    values: list[float] = []
    for lineno, row in enumerate(csv.reader(lines[1:]), start=2):
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        if lineno == 2 and row[0].strip() == "axis":
            continue
        if len(row) != 2:
            raise ParseError(source, lineno, f"expected 2 columns, got {len(row)}")
        try:
            x, y = float(row[0]), float(row[1])
        except ValueError:
            raise ParseError(source, lineno, f"non-numeric value in {row!r}") from None
        if not (np.isfinite(x) and np.isfinite(y)) or y < 0:
            raise ParseError(source, lineno, "values must be finite, intensity >= 0")
        axis.append(x)
        values.append(y)
    if not axis:
        raise ParseError(source, len(lines), "no data rows")
    try:
        return Spectrum(kind, np.asarray(axis), np.asarray(values), None, meta)
    except ValueError as exc:
        raise ParseError(source, 2, str(exc)) from exc


def read_spectrum_csv(path: str | Path) -> Spectrum:
    p = Path(path)
    return parse_spectrum_csv(p.read_text(), source=str(p))
