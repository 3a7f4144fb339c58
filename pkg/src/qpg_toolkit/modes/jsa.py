"""Joint spectral amplitude: phase-matching function times pump envelope."""

from __future__ import annotations

from collections.abc import Callable

import numpy as np
import structlog

from qpg_toolkit.dispersion.base import DispersionModel
from qpg_toolkit.dispersion.mismatch import delta_beta, find_phase_matching, scan_slope
from qpg_toolkit.errors import QpgError, SupportError
from qpg_toolkit.model.modes import JsaGrid, PumpEnvelope
from qpg_toolkit.model.process import DeltaBetaProfile, ProcessConfig, wavelength_nm_to_omega
from qpg_toolkit.modes.pump import pump_amplitude
from qpg_toolkit.phasematch.amplitude import pm_profile, pm_uniform

logger = structlog.get_logger(__name__)

# root of sin²(x)/x² = 1/e
SINC2_ONE_OVER_E_X = 1.64427

PhaseMatching = Callable[[np.ndarray, np.ndarray], np.ndarray]


def _signal_slope(config: ProcessConfig, model: DispersionModel, omega_o: float) -> float:
    """dΔβ/dω_s with the output frequency held fixed."""
    ws = config.omega_signal
    h = 1e-6 * ws
    pts = np.array([ws - h, ws + h])
    db = delta_beta(config, model, pts, omega_o - pts)
    return float((db[1] - db[0]) / (2 * h))


def pm_output_width(config: ProcessConfig, model: DispersionModel) -> float:
    """1/e half-width (rad/s) of |φ|² along the output axis at the signal centre."""
    slope = abs(scan_slope(config, model, "output"))
    if slope == 0.0:
        return float("inf")
    return 2.0 * SINC2_ONE_OVER_E_X / (config.length_m * slope)


def default_grids(
    config: ProcessConfig,
    model: DispersionModel,
    pump: PumpEnvelope,
    points: int = 512,
    pump_span_sigmas: float = 5.0,
    pm_span_widths: float = 8.0,
) -> tuple[np.ndarray, np.ndarray]:
    """(signal, output) angular-frequency axes covering the JSA support.

    The output axis is centred on the phase-matched output when that lies
    within the pump's span of signal + pump centre, otherwise on signal +
    pump centre, so the requested pump centre is always inside the grid.
    """
    sigma = pump.sigma_omega
    ws0 = config.omega_signal
    span_s = pump_span_sigmas * sigma
    wo0 = ws0 + pump.omega_center
    try:
        wo_pm = float(wavelength_nm_to_omega(find_phase_matching(config, model, "output")))
    except QpgError:
        wo_pm = wo0
    if abs(wo_pm - wo0) <= span_s:
        wo0 = wo_pm

    width_o = pm_output_width(config, model)
    span_pump = 2.0 * span_s
    if np.isfinite(width_o):
        b = scan_slope(config, model, "output")
        tilt = abs(_signal_slope(config, model, wo0) / b)
        span_o = min(pm_span_widths * width_o + span_s * tilt, span_pump)
    else:
        span_o = span_pump
    signal = np.linspace(ws0 - span_s, ws0 + span_s, points)
    output = np.linspace(wo0 - span_o, wo0 + span_o, points)
    logger.debug(
        "modes.grids", points=points, signal_span=span_s, output_span=span_o, pm_width=width_o
    )
    return signal, output


def build_jsa(
    config: ProcessConfig,
    model: DispersionModel,
    pump: PumpEnvelope,
    signal_axis: np.ndarray,
    output_axis: np.ndarray,
    profile: DeltaBetaProfile | None = None,
    phase_matching: PhaseMatching | None = None,
) -> JsaGrid:
    """JSA(i, j) = φ(ω_o[j], ω_s[i]) · α(ω_o[j] - ω_s[i]).

    `phase_matching`, when given, replaces the dispersion-model φ and is
    called with broadcast (ω_s, ω_o) arrays.
    """
    ws = np.asarray(signal_axis, dtype=float)[:, None]
    wo = np.asarray(output_axis, dtype=float)[None, :]
    wp = wo - ws
    lo, hi = float(wp.min()), float(wp.max())
    if not lo <= pump.omega_center <= hi:
        raise SupportError(
            f"pump centre {pump.omega_center:.6e} rad/s outside the grid's pump range "
            f"[{lo:.6e}, {hi:.6e}]"
        )
    if phase_matching is not None:
        phi = np.broadcast_to(phase_matching(ws, wo), wp.shape)
    else:
        db = delta_beta(config, model, np.broadcast_to(ws, wp.shape), wp)
        phi = pm_uniform(db, config.length_m) if profile is None else pm_profile(profile, db)
    amplitude = phi * pump_amplitude(pump, wp)
    return JsaGrid(
        signal_axis=ws[:, 0],
        output_axis=wo[0, :],
        amplitude=amplitude,
        metadata={
            "pump_order": pump.order,
            "pump_center_nm": pump.center_nm,
            "pump_sigma_nm": pump.sigma_nm,
            "length_mm": config.length_mm,
            "temperature_c": config.temperature_c,
            "sections": 1 if profile is None else profile.sections,
        },
    )
