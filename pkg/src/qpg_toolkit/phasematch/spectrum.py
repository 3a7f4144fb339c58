"""Phase-matching spectra along wavelength scans, and axis conversion."""

from __future__ import annotations

import math

import numpy as np
from scipy.constants import c as SPEED_OF_LIGHT

from qpg_toolkit.dispersion.base import DispersionModel
from qpg_toolkit.dispersion.mismatch import (
    delta_beta,
    estimate_fwhm_nm,
    find_phase_matching,
    scan_omegas,
)
from qpg_toolkit.errors import AxisError, ConfigError, QpgError
from qpg_toolkit.model.process import DeltaBetaProfile, ProcessConfig, ScanField
from qpg_toolkit.model.spectrum import AxisKind, Spectrum, SpectrumMetadata
from qpg_toolkit.phasematch.amplitude import pm_profile, pm_uniform


def pm_spectrum(
    config: ProcessConfig,
    model: DispersionModel,
    wavelengths_nm: np.ndarray,
    profile: DeltaBetaProfile | None = None,
    scan_field: ScanField = "signal",
    normalize: bool = True,
    device_id: str | None = None,
) -> Spectrum:
    """|φ|² along a wavelength scan of `scan_field`, peak-normalized by default."""
    lam = np.asarray(wavelengths_nm, dtype=float).reshape(-1)
    ws, wp = scan_omegas(config, scan_field, lam)
    db = delta_beta(config, model, ws, wp)
    if profile is None:
        amp = pm_uniform(db, config.length_m)
    else:
        if not math.isclose(profile.length_mm, config.length_mm, rel_tol=1e-9):
            raise ConfigError(
                f"profile length {profile.length_mm} mm differs from device length "
                f"{config.length_mm} mm"
            )
        amp = pm_profile(profile, db)
    intensity = np.abs(amp) ** 2
    spectrum = Spectrum(
        "wavelength",
        lam,
        intensity,
        amp,
        SpectrumMetadata(
            temperature_c=config.temperature_c, device_id=device_id, scan_field=scan_field
        ),
    )
    return spectrum.normalized() if normalize else spectrum


def default_scan_axis(
    config: ProcessConfig,
    model: DispersionModel,
    scan_field: ScanField,
    points: int = 801,
    span_fwhm: float = 6.0,
) -> np.ndarray:
    """Uniform wavelength axis centred on the phase-matching wavelength (nm)."""
    try:
        centre = find_phase_matching(config, model, scan_field)
    except QpgError:
        centre = (
            config.signal_wavelength_nm if scan_field == "signal" else config.output_wavelength_nm
        )
    assert centre is not None
    half = span_fwhm * estimate_fwhm_nm(config, model, scan_field)
    return np.linspace(centre - half, centre + half, points)


def axis_convert(spectrum: Spectrum, to: AxisKind) -> Spectrum:
    """Convert between wavelength (nm), frequency (THz) and angular frequency (rad/s).

    Samples keep their intensities; the axis is reordered to stay increasing.
    """
    src = spectrum.axis_kind
    if src == to:
        return spectrum
    if "detuning" in (src, to):
        raise AxisError("detuning axes cannot be converted")
    values = np.asarray(spectrum.axis, dtype=float)
    if np.any(values <= 0):
        raise AxisError(f"{src} axis must be positive for conversion")

    # via angular frequency in rad/s
    if src == "wavelength":
        omega = 2 * math.pi * SPEED_OF_LIGHT / (values * 1e-9)
    elif src == "frequency":
        omega = 2 * math.pi * values * 1e12
    else:
        omega = values

    if to == "wavelength":
        out = 2 * math.pi * SPEED_OF_LIGHT / omega * 1e9
    elif to == "frequency":
        out = omega / (2 * math.pi) * 1e-12
    else:
        out = omega

    intensity = np.asarray(spectrum.intensity)
    amp = spectrum.amplitude
    flip = src == "wavelength" or to == "wavelength"
    if flip:
        out, intensity = out[::-1], intensity[::-1]
        amp = None if amp is None else amp[::-1]
    return Spectrum(to, out, intensity, amp, spectrum.metadata)
