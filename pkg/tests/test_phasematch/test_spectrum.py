"""Unit tests for pm_spectrum, scan axes and axis conversion."""

from __future__ import annotations

from typing import Callable

import numpy as np
import pytest
from scipy.signal import find_peaks

from qpg_toolkit.dispersion.mismatch import delta_beta, scan_omegas
from qpg_toolkit.dispersion.taylor import TaylorDispersionModel
from qpg_toolkit.errors import AxisError, ConfigError
from qpg_toolkit.model.process import DeltaBetaProfile, ProcessConfig
from qpg_toolkit.model.spectrum import Spectrum
from qpg_toolkit.phasematch.amplitude import pm_profile, pm_uniform
from qpg_toolkit.phasematch.metrics import bandwidth
from qpg_toolkit.phasematch.spectrum import axis_convert, default_scan_axis, pm_spectrum


def test_uniform_spectrum_is_sinc_squared_with_side_lobes(
    process_config: ProcessConfig, taylor_model: TaylorDispersionModel
) -> None:
    cfg = process_config.with_updates(length_mm=71.0)
    axis = default_scan_axis(cfg, taylor_model, "signal", points=4001, span_fwhm=3.0)
    spectrum = pm_spectrum(cfg, taylor_model, axis)
    y = np.asarray(spectrum.intensity)
    assert y.max() == pytest.approx(1.0)
    peaks, _ = find_peaks(y)
    heights = np.sort(y[peaks])[::-1]
    assert heights[1] == pytest.approx(0.0472, abs=1e-3)


def test_peak_normalization_optional(
    process_config: ProcessConfig, taylor_model: TaylorDispersionModel
) -> None:
    axis = np.linspace(1549.0, 1551.0, 11)
    raw = pm_spectrum(process_config, taylor_model, axis, normalize=False)
    ws, wp = scan_omegas(process_config, "signal", axis)
    expected = np.abs(pm_uniform(delta_beta(process_config, taylor_model, ws, wp), 0.02)) ** 2
    assert np.allclose(raw.intensity, expected, rtol=1e-12, atol=0)
    assert raw.amplitude is not None


def test_single_sample_matches_scalar_path(
    process_config: ProcessConfig, taylor_model: TaylorDispersionModel
) -> None:
    spectrum = pm_spectrum(process_config, taylor_model, np.array([1550.3]), normalize=False)
    ws, wp = scan_omegas(process_config, "signal", np.array([1550.3]))
    scalar = complex(pm_uniform(float(delta_beta(process_config, taylor_model, ws, wp)[0]), 0.02))
    assert spectrum.size == 1
    assert spectrum.amplitude is not None
    assert complex(spectrum.amplitude[0]) == pytest.approx(scalar, abs=1e-15)


def test_profile_path_uses_pm_profile(
    process_config: ProcessConfig,
    taylor_model: TaylorDispersionModel,
    make_profile: Callable[..., DeltaBetaProfile],
) -> None:
    profile = make_profile([100.0, -50.0, 0.0, 25.0], length_mm=20.0)
    axis = np.linspace(1548.0, 1552.0, 81)
    spectrum = pm_spectrum(process_config, taylor_model, axis, profile, normalize=False)
    ws, wp = scan_omegas(process_config, "signal", axis)
    expected = np.abs(pm_profile(profile, delta_beta(process_config, taylor_model, ws, wp))) ** 2
    assert np.allclose(spectrum.intensity, expected, rtol=1e-12, atol=1e-15)


def test_profile_length_must_match_device(
    process_config: ProcessConfig,
    taylor_model: TaylorDispersionModel,
    make_profile: Callable[..., DeltaBetaProfile],
) -> None:
    with pytest.raises(ConfigError, match="profile length"):
        pm_spectrum(
            process_config, taylor_model, np.array([1550.0]), make_profile(length_mm=30.0)
        )


def test_output_scan_metadata(
    process_config: ProcessConfig, taylor_model: TaylorDispersionModel
) -> None:
    axis = default_scan_axis(process_config, taylor_model, "output", points=101)
    spectrum = pm_spectrum(process_config, taylor_model, axis, scan_field="output", device_id="d1")
    assert spectrum.metadata.scan_field == "output"
    assert spectrum.metadata.device_id == "d1"
    assert spectrum.metadata.temperature_c == 20.0
    lam_o = process_config.output_wavelength_nm
    assert lam_o is not None
    assert axis[50] == pytest.approx(lam_o, abs=1e-6)


# ---------------------------------------------------------------------------
# axis_convert
# ---------------------------------------------------------------------------


def test_wavelength_to_frequency_centre(make_spectrum: Callable[..., Spectrum]) -> None:
    spectrum = make_spectrum(axis=np.array([549.0, 550.0, 551.0]), intensity=np.ones(3))
    freq = axis_convert(spectrum, "frequency")
    assert freq.unit == "THz"
    assert np.all(np.diff(freq.axis) > 0)
    assert freq.axis[1] == pytest.approx(545.077, abs=1e-3)


def test_bandwidth_conversion_consistent(make_spectrum: Callable[..., Spectrum]) -> None:
    axis = np.linspace(549.9, 550.1, 2001)
    sigma = 0.03 / (2 * np.sqrt(np.log(2)))
    spectrum = make_spectrum(axis=axis, intensity=np.exp(-(((axis - 550.0) / sigma) ** 2)))
    assert bandwidth(spectrum, "fwhm") == pytest.approx(0.03, rel=1e-3)
    freq = axis_convert(spectrum, "frequency")
    assert bandwidth(freq, "fwhm") * 1e3 == pytest.approx(29.75, rel=0.01)


def test_round_trip_identity(make_spectrum: Callable[..., Spectrum]) -> None:
    spectrum = make_spectrum()
    back = axis_convert(axis_convert(spectrum, "angular_frequency"), "wavelength")
    assert np.allclose(back.axis, spectrum.axis, rtol=1e-9, atol=0)
    assert np.array_equal(back.intensity, spectrum.intensity)


def test_detuning_and_non_positive_axes_rejected(make_spectrum: Callable[..., Spectrum]) -> None:
    detuning = make_spectrum(
        axis=np.linspace(-1.0, 1.0, 5), axis_kind="detuning", intensity=np.ones(5)
    )
    with pytest.raises(AxisError):
        axis_convert(detuning, "wavelength")
    negative = make_spectrum(axis=np.linspace(-1.0, 1.0, 5), intensity=np.ones(5))
    with pytest.raises(AxisError):
        axis_convert(negative, "frequency")
