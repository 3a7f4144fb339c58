"""Undepleted-pump conversion efficiency η = sin²(√(η_norm·P)·L)."""

from __future__ import annotations

import math

import numpy as np


def conversion_efficiency(
    eta_norm: float, power_w: float | np.ndarray, length_cm: float
) -> np.ndarray:
    """η_norm in 1/(W·cm²), pump power in W, length in cm. Over-rotation is not clamped."""
    p = np.asarray(power_w, dtype=float)
    if eta_norm < 0 or length_cm < 0 or np.any(p < 0):
        raise ValueError("eta_norm, power and length must be >= 0")
    return np.sin(np.sqrt(eta_norm * p) * length_cm) ** 2


def unit_efficiency_power(eta_norm: float, length_cm: float) -> float:
    """Smallest pump power (W) with η = 1."""
    if eta_norm <= 0 or length_cm <= 0:
        raise ValueError("eta_norm and length must be > 0")
    return (math.pi / (2.0 * length_cm)) ** 2 / eta_norm
