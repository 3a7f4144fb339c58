"""Quasi-phase-matched mismatch Δβ and helpers built on it."""

from __future__ import annotations

import math

import numpy as np
import structlog
from scipy.constants import c as SPEED_OF_LIGHT
from scipy.optimize import brentq

from qpg_toolkit.dispersion.base import DispersionModel
from qpg_toolkit.errors import AxisError, ConfigError, QpgError
from qpg_toolkit.model.process import ProcessConfig, ScanField, wavelength_nm_to_omega

logger = structlog.get_logger(__name__)

# root of sin²(x)/x² = 1/2
SINC2_HALF_MAX_X = 1.3915573782515103
# FWHM of sinc²(ΔβL/2) expressed as Δβ·L
SINC2_FWHM_BETA_L = 4.0 * SINC2_HALF_MAX_X


def delta_beta(
    config: ProcessConfig,
    model: DispersionModel,
    omega_s: float | np.ndarray,
    omega_p: float | np.ndarray,
) -> np.ndarray:
    """k_s + k_p - k_o + 2π·order/Λ + configured offset, in 1/m.

    ω_o is always ω_s + ω_p. Inputs broadcast against each other.
    """
    ws = np.asarray(omega_s, dtype=float)
    wp = np.asarray(omega_p, dtype=float)
    db = model.wavevector_mismatch(config, ws, wp)
    if not model.includes_grating:
        db = db + config.grating_vector_per_m
    return db + config.delta_beta_offset_per_m


def delta_beta_map(
    config: ProcessConfig,
    model: DispersionModel,
    signal_grid: np.ndarray,
    pump_grid: np.ndarray,
) -> np.ndarray:
    """Δβ on the outer grid; entry (i, j) belongs to (signal_grid[i], pump_grid[j])."""
    ws = np.asarray(signal_grid, dtype=float).reshape(-1)
    wp = np.asarray(pump_grid, dtype=float).reshape(-1)
    for name, grid in (("signal", ws), ("pump", wp)):
        steps = np.diff(grid)
        if grid.size > 1 and not (np.all(steps > 0) or np.all(steps < 0)):
            raise AxisError(f"{name} grid must be strictly monotone")
    return delta_beta(config, model, ws[:, None], wp[None, :])


def width_to_delta_beta(
    width_um: float | np.ndarray, sensitivity_per_m_um: float | None
) -> np.ndarray:
    """Δβ offset equivalent to a waveguide-width deviation."""
    s = _sensitivity(sensitivity_per_m_um)
    return np.asarray(width_um, dtype=float) * s


def delta_beta_to_width(
    delta_beta_per_m: float | np.ndarray, sensitivity_per_m_um: float | None
) -> np.ndarray:
    s = _sensitivity(sensitivity_per_m_um)
    return np.asarray(delta_beta_per_m, dtype=float) / s


def _sensitivity(value: float | None) -> float:
    if value is None:
        raise ConfigError("process.width_sensitivity_per_m_um is not configured")
    if not value > 0:
        raise ConfigError("process.width_sensitivity_per_m_um must be > 0")
    return float(value)


def scan_omegas(
    config: ProcessConfig, scan_field: ScanField, wavelengths_nm: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """(ω_s, ω_p) sampled along a wavelength scan of `scan_field`.

    signal: the signal is scanned and the pump held at its centre.
    output: the signal is held and the pump follows ω_p = ω_o - ω_s.
    """
    w = wavelength_nm_to_omega(wavelengths_nm)
    if scan_field == "signal":
        return w, np.full_like(w, config.omega_pump)
    ws = config.omega_signal
    return np.full_like(w, ws), w - ws


def scan_slope(config: ProcessConfig, model: DispersionModel, scan_field: ScanField) -> float:
    """dΔβ/dω along a scan at the centre of `scan_field` (1/m per rad/s)."""
    w0 = config.omega_signal if scan_field == "signal" else config.omega_output
    h = 1e-6 * w0
    lam = (2 * math.pi * SPEED_OF_LIGHT / np.array([w0 - h, w0 + h])) * 1e9
    ws, wp = scan_omegas(config, scan_field, lam)
    db = delta_beta(config, model, ws, wp)
    return float((db[1] - db[0]) / (2 * h))


def estimate_fwhm_nm(config: ProcessConfig, model: DispersionModel, scan_field: ScanField) -> float:
    """Ideal sinc² FWHM along a scan, from the local Δβ slope."""
    slope = abs(scan_slope(config, model, scan_field))
    if slope == 0.0:
        raise QpgError(f"Δβ does not vary along the {scan_field} scan")
    lam_nm = config.signal_wavelength_nm if scan_field == "signal" else config.output_wavelength_nm
    assert lam_nm is not None
    fwhm_omega = SINC2_FWHM_BETA_L / (config.length_m * slope)
    lam = lam_nm * 1e-9
    return fwhm_omega * lam**2 / (2 * math.pi * SPEED_OF_LIGHT) * 1e9


def qpm_period(config: ProcessConfig, model: DispersionModel) -> float:
    """Poling period (µm) that phase-matches the configured centres."""
    if model.includes_grating:
        raise QpgError("model already folds in the grating; period is not defined")
    material = float(
        model.wavevector_mismatch(
            config, np.asarray(config.omega_signal), np.asarray(config.omega_pump)
        )
    )
    residual = material + config.delta_beta_offset_per_m
    if residual >= 0:
        raise QpgError("k_o <= k_s + k_p: no quasi-phase-matching period exists")
    return 2 * math.pi * config.qpm_order / -residual * 1e6


def find_phase_matching(
    config: ProcessConfig,
    model: DispersionModel,
    scan_field: ScanField = "signal",
    window_nm: float = 20.0,
) -> float:
    """Wavelength of `scan_field` (nm) where Δβ vanishes, searched within ±window_nm."""
    centre = (
        config.signal_wavelength_nm if scan_field == "signal" else config.output_wavelength_nm
    )
    assert centre is not None

    def mismatch(lam_nm: float) -> float:
        ws, wp = scan_omegas(config, scan_field, np.asarray([lam_nm]))
        return float(delta_beta(config, model, ws, wp)[0])

    lo, hi = centre - window_nm, centre + window_nm
    f_lo, f_hi = mismatch(lo), mismatch(hi)
    if f_lo * f_hi > 0:
        raise QpgError(
            f"no phase-matching root for the {scan_field} scan within ±{window_nm} nm of "
            f"{centre:.4f} nm"
        )
    root = float(brentq(mismatch, lo, hi, xtol=1e-9, rtol=1e-14))
    logger.debug("dispersion.phase_matching", scan_field=scan_field, wavelength_nm=root)
    return root
