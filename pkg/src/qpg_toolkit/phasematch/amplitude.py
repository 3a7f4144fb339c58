"""Closed-form phase-matching amplitudes.

Inhomogeneity enters through the accumulated phase ∫₀^z Δβ(z')dz'. Within
section j (length ℓ_j, mismatch b_j = Δβ + f_j, entry phase Φ_j):

    ∫ e^{i(Φ_j + b_j z)} dz = e^{iΦ_j} · ℓ_j · e^{i b_j ℓ_j / 2} · sinc(b_j ℓ_j / 2)

which is regular at b_j = 0.
"""

from __future__ import annotations

import numpy as np

from qpg_toolkit.model.process import DeltaBetaProfile


def pm_uniform(delta_beta: float | np.ndarray, length_m: float) -> np.ndarray:
    """(1/L)∫₀^L e^{iΔβz}dz = e^{iΔβL/2}·sinc(ΔβL/2)."""
    if not length_m > 0:
        raise ValueError("length must be > 0")
    x = np.asarray(delta_beta, dtype=float) * length_m
    # np.sinc(t) = sin(πt)/(πt)
    return np.exp(0.5j * x) * np.sinc(x / (2 * np.pi))


def pm_sections(
    lengths_m: np.ndarray, offsets_per_m: np.ndarray, delta_beta: float | np.ndarray
) -> np.ndarray:
    """Normalized amplitude of consecutive sections, broadcasting over Δβ."""
    db = np.asarray(delta_beta, dtype=float)
    b = db[..., None] + offsets_per_m
    step = b * lengths_m
    entry = np.cumsum(step, axis=-1) - step
    terms = lengths_m * np.exp(1j * (entry + 0.5 * step)) * np.sinc(step / (2 * np.pi))
    return terms.sum(axis=-1) / lengths_m.sum()


def pm_profile(profile: DeltaBetaProfile, delta_beta: float | np.ndarray) -> np.ndarray:
    return pm_sections(profile.section_lengths_m, profile.offsets, delta_beta)
