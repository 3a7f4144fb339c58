"""Literature comparison table with recomputed columns."""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Callable, Sequence

from scipy.constants import c as SPEED_OF_LIGHT

from qpg_toolkit.model.bench import BandwidthFlag, ComparisonRow
from qpg_toolkit.model.literature import LiteratureDataset, LiteratureEntry
from qpg_toolkit.modes.projection import bandwidth_compression

# relative agreement between stated and recomputed compression
COMPRESSION_RTOL = 0.02
# relative band around the ideal bandwidth reported as nominal
BANDWIDTH_RTOL = 0.1

REPORT_COLUMNS = (
    "length_mm",
    "output_bandwidth_nm",
    "selectivity_db",
    "bandwidth_compression",
    "internal_efficiency",
    "eta_norm",
    "citation",
    "output_bandwidth_ghz",
    "derived_compression",
    "compression_consistent",
    "ideal_bandwidth_nm",
    "bandwidth_flag",
    "notes",
)

IdealBandwidth = Callable[[float], float]


def nm_to_ghz(bandwidth_nm: float, center_nm: float) -> float:
    """Bandwidth in GHz of a small wavelength interval around center_nm."""
    return SPEED_OF_LIGHT * bandwidth_nm / center_nm**2


def _flag(measured_nm: float, ideal_nm: float) -> BandwidthFlag:
    if measured_nm > ideal_nm * (1 + BANDWIDTH_RTOL):
        return "broadened"
    if measured_nm < ideal_nm * (1 - BANDWIDTH_RTOL):
        return "anomalous"
    return "nominal"


def _row(
    entry: LiteratureEntry, dataset: LiteratureDataset, ideal: IdealBandwidth | None
) -> ComparisonRow:
    row = ComparisonRow(
        length_mm=entry.length_mm,
        output_bandwidth_nm=entry.output_bandwidth_nm,
        selectivity_db=entry.selectivity_db,
        bandwidth_compression=entry.bandwidth_compression,
        internal_efficiency=entry.internal_efficiency,
        eta_norm=entry.eta_norm,
        citation=entry.citation,
        notes=entry.notes,
    )
    if entry.output_bandwidth_nm is None:
        return row
    ghz = nm_to_ghz(entry.output_bandwidth_nm, dataset.output_center_nm)
    row.output_bandwidth_ghz = ghz
    row.derived_compression = bandwidth_compression(dataset.input_bandwidth_ghz, ghz)
    if entry.bandwidth_compression is not None:
        rel = abs(entry.bandwidth_compression / row.derived_compression - 1.0)
        row.compression_consistent = rel <= COMPRESSION_RTOL
    if ideal is not None:
        row.ideal_bandwidth_nm = ideal(entry.length_mm)
        row.bandwidth_flag = _flag(entry.output_bandwidth_nm, row.ideal_bandwidth_nm)
    return row


def comparison_report(
    dataset: LiteratureDataset,
    device: LiteratureEntry | None = None,
    ideal_bandwidth_nm: IdealBandwidth | None = None,
) -> list[ComparisonRow]:
    """One row per literature entry; `device` replaces the entry with its citation or is appended.

    `ideal_bandwidth_nm(length_mm)` enables the broadened/anomalous flags.
    """
    entries = list(dataset.entries)
    if device is not None:
        citations = [e.citation for e in entries]
        if device.citation in citations:
            entries[citations.index(device.citation)] = device
        else:
            entries.append(device)
    return [_row(e, dataset, ideal_bandwidth_nm) for e in entries]


def _cell(value: object, fmt: str = "g") -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return format(value, fmt)
    return str(value)


def format_report_csv(rows: Sequence[ComparisonRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(REPORT_COLUMNS)
    for r in rows:
        writer.writerow(
            [
                _cell(r.length_mm),
                _cell(r.output_bandwidth_nm),
                _cell(r.selectivity_db),
                _cell(r.bandwidth_compression),
                _cell(r.internal_efficiency),
                _cell(r.eta_norm),
                r.citation,
                _cell(r.output_bandwidth_ghz, ".1f"),
                _cell(r.derived_compression, ".2f"),
                _cell(r.compression_consistent),
                _cell(r.ideal_bandwidth_nm, ".4g"),
                _cell(r.bandwidth_flag),
                r.notes,
            ]
        )
    return buf.getvalue()


def format_report_json(rows: Sequence[ComparisonRow], dataset: LiteratureDataset) -> str:
    doc = {
        "dataset_version": dataset.version,
        "input_bandwidth_ghz": dataset.input_bandwidth_ghz,
        "output_center_nm": dataset.output_center_nm,
        "time_ordering_efficiency_cap": dataset.time_ordering_efficiency_cap,
        "rows": [r.model_dump(mode="json") for r in rows],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
