"""η(P) curves for literature devices."""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np
import structlog

from qpg_toolkit.efficiency.model import conversion_efficiency, unit_efficiency_power
from qpg_toolkit.model.bench import EfficiencyCurve
from qpg_toolkit.model.literature import LiteratureEntry

logger = structlog.get_logger(__name__)


def power_axis(power_max_w: float, points: int = 201) -> np.ndarray:
    if power_max_w <= 0 or points < 2:
        raise ValueError("need power_max_w > 0 and at least 2 points")
    return np.linspace(0.0, power_max_w, points)


def efficiency_curves(
    entries: Sequence[LiteratureEntry], powers_w: np.ndarray
) -> list[EfficiencyCurve]:
    """Undepleted-pump curve per entry with an η_norm; others are skipped."""
    powers = np.asarray(powers_w, dtype=float)
    curves = []
    for entry in entries:
        if entry.eta_norm is None:
            logger.warning("bench.curve_skipped", citation=entry.citation, reason="no eta_norm")
            continue
        measured = None
        if entry.measured_power_w is not None and entry.internal_efficiency is not None:
            measured = (entry.measured_power_w, entry.internal_efficiency)
        curves.append(
            EfficiencyCurve(
                citation=entry.citation,
                eta_norm=entry.eta_norm,
                length_cm=entry.length_cm,
                powers_w=powers.tolist(),
                efficiency=conversion_efficiency(entry.eta_norm, powers, entry.length_cm).tolist(),
                unit_power_w=unit_efficiency_power(entry.eta_norm, entry.length_cm),
                measured=measured,
            )
        )
    return curves


def format_curves_csv(curves: Sequence[EfficiencyCurve]) -> str:
    """Long-format plot data: citation,power_W,efficiency."""
    lines = ["citation,power_W,efficiency"]
    for curve in curves:
        for p, eta in zip(curve.powers_w, curve.efficiency):
            lines.append(f"{curve.citation},{p:.17g},{eta:.17g}")
    return "\n".join(lines) + "\n"
