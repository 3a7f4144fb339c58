"""Schmidt decomposition of a sampled JSA and selectivity."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from qpg_toolkit.errors import DecompositionError
from qpg_toolkit.model.modes import JsaGrid, SchmidtDecomposition
from qpg_toolkit.modes.projection import extinction_from_selectivity
from qpg_toolkit.modes.pump import grid_weights


def schmidt_decompose(jsa: JsaGrid, n_modes: int | None = None) -> SchmidtDecomposition:
    """SVD of the JSA weighted by √Δω on both axes.

    Coefficients are the squared singular values normalized to sum to 1.
    """
    sw = np.sqrt(grid_weights(jsa.signal_axis))
    ow = np.sqrt(grid_weights(jsa.output_axis))
    weighted = jsa.amplitude * sw[:, None] * ow[None, :]
    if not np.any(weighted):
        raise DecompositionError("JSA is identically zero")
    u, s, vh = np.linalg.svd(weighted, full_matrices=False)
    power = s**2
    total = float(power.sum())
    k = power.size if n_modes is None else min(n_modes, power.size)
    return SchmidtDecomposition(
        coefficients=power / total,
        signal_modes=u[:, :k] / sw[:, None],
        output_modes=vh[:k, :].T / ow[:, None],
        signal_axis=np.asarray(jsa.signal_axis),
        output_axis=np.asarray(jsa.output_axis),
        norm=float(np.sqrt(total)),
        metadata=dict(jsa.metadata),
    )


def selectivity(d: SchmidtDecomposition, m: int = 0) -> float:
    """S = ρ_m² / Σρ_n (= ρ_m² for normalized coefficients)."""
    rho = d.coefficients
    if not 0 <= m < rho.size:
        raise ValueError(f"mode index {m} outside 0..{rho.size - 1}")
    return float(rho[m] ** 2 / rho.sum())


@dataclass(frozen=True)
class SelectivityReport:
    mode: int
    selectivity: float
    # the same formula read with Schmidt amplitudes √ρ_n: ρ_m / Σ√ρ_n
    amplitude_form: float
    schmidt_number: float
    extinction_db_sqrt: float


def selectivity_report(d: SchmidtDecomposition, m: int = 0) -> SelectivityReport:
    s = selectivity(d, m)
    rho = d.coefficients
    return SelectivityReport(
        mode=m,
        selectivity=s,
        amplitude_form=float(rho[m] / np.sqrt(rho).sum()),
        schmidt_number=d.schmidt_number,
        extinction_db_sqrt=extinction_from_selectivity(s),
    )
