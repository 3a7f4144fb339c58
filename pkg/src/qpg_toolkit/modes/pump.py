"""Hermite-Gaussian pump envelopes.

With x = √2·(ω - ω_c)/σ the order-n envelope is H_n(x)·exp(-x²/2), so the
order-0 amplitude falls to 1/e at a detuning of σ.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import eval_hermite

from qpg_toolkit.errors import NormalizationError
from qpg_toolkit.model.modes import PumpEnvelope

SPAN_SIGMAS = 5.0


def hermite_gauss(order: int, x: np.ndarray) -> np.ndarray:
    """Hermite-Gaussian function normalized to unit L² norm over x."""
    norm = 1.0 / math.sqrt(2.0**order * math.factorial(order) * math.sqrt(math.pi))
    x = np.asarray(x, dtype=float)
    return norm * eval_hermite(order, x) * np.exp(-0.5 * x * x)


def grid_weights(axis: np.ndarray) -> np.ndarray:
    """Trapezoid quadrature weights of a monotone axis."""
    axis = np.asarray(axis, dtype=float)
    if axis.size == 1:
        return np.ones(1)
    steps = np.abs(np.diff(axis))
    w = np.zeros_like(axis)
    w[:-1] += 0.5 * steps
    w[1:] += 0.5 * steps
    return w


def pump_amplitude(pump: PumpEnvelope, omega: np.ndarray) -> np.ndarray:
    """Envelope normalized in the continuum: ∫|α(ω)|² dω = 1."""
    sigma = pump.sigma_omega
    detuning = np.asarray(omega, dtype=float) - pump.omega_center
    x = math.sqrt(2.0) * detuning / sigma
    values = hermite_gauss(pump.order, x) * math.sqrt(math.sqrt(2.0) / sigma)
    if pump.chirp_s2 == 0.0:
        return values.astype(complex)
    return values * np.exp(0.5j * pump.chirp_s2 * detuning**2)


def pump_envelope(pump: PumpEnvelope, omega_axis: np.ndarray) -> np.ndarray:
    """Envelope samples L²-normalized on `omega_axis` itself."""
    axis = np.asarray(omega_axis, dtype=float)
    sigma = pump.sigma_omega
    lo, hi = pump.omega_center - SPAN_SIGMAS * sigma, pump.omega_center + SPAN_SIGMAS * sigma
    if axis.min() > lo or axis.max() < hi:
        raise NormalizationError(
            f"axis must span ±{SPAN_SIGMAS:g} sigma around the pump centre "
            f"([{lo:.6e}, {hi:.6e}] rad/s)"
        )
    values = pump_amplitude(pump, axis)
    norm = math.sqrt(float(np.sum(np.abs(values) ** 2 * grid_weights(axis))))
    if norm == 0.0:
        raise NormalizationError("envelope vanishes on the axis")
    return values / norm
