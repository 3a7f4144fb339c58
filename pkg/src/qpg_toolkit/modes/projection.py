"""Mode-projection powers, extinction ratio and bandwidth compression."""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np

from qpg_toolkit.dispersion.base import DispersionModel
from qpg_toolkit.errors import QpgError
from qpg_toolkit.model.modes import PumpEnvelope
from qpg_toolkit.model.process import DeltaBetaProfile, ProcessConfig
from qpg_toolkit.modes.jsa import PhaseMatching, build_jsa, default_grids
from qpg_toolkit.modes.pump import grid_weights, pump_amplitude


def signal_mode(config: ProcessConfig, pump: PumpEnvelope, signal_axis: np.ndarray) -> np.ndarray:
    """Order-0 Hermite-Gaussian at the signal centre with the pump's width in ω."""
    reference = PumpEnvelope(order=0, center_nm=config.signal_wavelength_nm, sigma_nm=1.0)
    reference = reference.with_sigma_omega(pump.sigma_omega)
    return pump_amplitude(reference, signal_axis).real


def projection_powers(
    config: ProcessConfig,
    model: DispersionModel,
    pump: PumpEnvelope,
    orders: Sequence[int],
    grids: tuple[np.ndarray, np.ndarray] | None = None,
    profile: DeltaBetaProfile | None = None,
    phase_matching: PhaseMatching | None = None,
) -> list[float]:
    """Up-converted power P_n = ‖∫ JSA_n(ω_s, ·) ψ(ω_s) dω_s‖² per pump order."""
    signal_axis, output_axis = grids if grids is not None else default_grids(config, model, pump)
    psi = signal_mode(config, pump, signal_axis) * grid_weights(signal_axis)
    out_w = grid_weights(output_axis)
    powers = []
    for n in orders:
        jsa = build_jsa(
            config, model, pump.with_order(n), signal_axis, output_axis, profile, phase_matching
        )
        field = psi @ jsa.amplitude
        powers.append(float(np.sum(np.abs(field) ** 2 * out_w)))
    return powers


def mode_projection_power(
    config: ProcessConfig,
    model: DispersionModel,
    pump: PumpEnvelope,
    order: int,
    grids: tuple[np.ndarray, np.ndarray] | None = None,
    profile: DeltaBetaProfile | None = None,
    phase_matching: PhaseMatching | None = None,
) -> float:
    """P_n / P_0 with the signal fixed to the matched order-0 mode."""
    p0, pn = projection_powers(config, model, pump, [0, order], grids, profile, phase_matching)
    if p0 == 0.0:
        raise QpgError("order-0 projection vanishes")
    return pn / p0


def extinction_ratio(p1: float, p0: float) -> float:
    """ε = -10·log10(P_1/P_0) in dB."""
    if p0 <= 0.0:
        raise QpgError("P_0 must be > 0")
    if p1 < 0.0:
        raise QpgError("P_1 must be >= 0")
    if p1 == 0.0:
        return math.inf
    return -10.0 * math.log10(p1 / p0)


def extinction_from_selectivity(s: float) -> float:
    """ε = -10·log10(√S), the Schmidt-based reading."""
    if s <= 0.0:
        return math.inf
    return -10.0 * math.log10(math.sqrt(s))


def bandwidth_compression(input_ghz: float, output_ghz: float) -> float:
    if input_ghz <= 0 or output_ghz <= 0:
        raise ValueError("bandwidths must be > 0")
    return input_ghz / output_ghz
