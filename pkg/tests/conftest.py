"""Shared pytest fixtures for the qpg-toolkit test suite."""

from __future__ import annotations

from typing import Callable

import numpy as np
import pytest

from qpg_toolkit.dispersion.sellmeier import CONGRUENT_LINBO3, SellmeierModel
from qpg_toolkit.dispersion.taylor import TaylorDispersionModel
from qpg_toolkit.model.process import DeltaBetaProfile, ProcessConfig
from qpg_toolkit.model.spectrum import AxisKind, Spectrum, SpectrumMetadata

# inverse group velocities (s/m); signal and pump are group-velocity matched
K1_SIGNAL = 7.30e-9
K1_PUMP = 7.30e-9
K1_OUTPUT = 7.87e-9


# ---------------------------------------------------------------------------
# Process / dispersion fixtures
# ---------------------------------------------------------------------------


@pytest.fixture
def process_config() -> ProcessConfig:
    """Short analytic test device; the Taylor model carries the grating itself."""
    return ProcessConfig(
        signal_wavelength_nm=1550.0,
        pump_wavelength_nm=850.0,
        poling_period_um=4.4,
        temperature_c=20.0,
        length_mm=20.0,
        width_sensitivity_per_m_um=2.0e3,
    )


@pytest.fixture
def taylor_model(process_config: ProcessConfig) -> TaylorDispersionModel:
    return TaylorDispersionModel(
        omega_signal=process_config.omega_signal,
        omega_pump=process_config.omega_pump,
        k1_signal=K1_SIGNAL,
        k1_pump=K1_PUMP,
        k1_output=K1_OUTPUT,
    )


@pytest.fixture
def sellmeier_model() -> SellmeierModel:
    return SellmeierModel(CONGRUENT_LINBO3)


@pytest.fixture
def design_config() -> ProcessConfig:
    """The 71 mm, 200 °C QPG design point."""
    return ProcessConfig(
        signal_wavelength_nm=1550.0,
        pump_wavelength_nm=850.0,
        poling_period_um=4.4,
        temperature_c=200.0,
        length_mm=71.0,
    )


# ---------------------------------------------------------------------------
# Model factories
# ---------------------------------------------------------------------------


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)


@pytest.fixture
def make_profile() -> Callable[..., DeltaBetaProfile]:
    def _factory(
        offsets: list[float] | np.ndarray | None = None,
        length_mm: float = 20.0,
        sections: int | None = None,
    ) -> DeltaBetaProfile:
        if offsets is None:
            return DeltaBetaProfile.uniform(length_mm, sections or 1)
        return DeltaBetaProfile.uniform(length_mm, len(offsets), offsets)

    return _factory


@pytest.fixture
def make_spectrum() -> Callable[..., Spectrum]:
    def _factory(
        intensity: np.ndarray | None = None,
        axis: np.ndarray | None = None,
        axis_kind: AxisKind = "wavelength",
        temperature_c: float | None = 20.0,
    ) -> Spectrum:
        if axis is None:
            axis = np.linspace(1549.0, 1551.0, 201)
        if intensity is None:
            intensity = np.exp(-(((axis - axis.mean()) / 0.2) ** 2))
        return Spectrum(
            axis_kind, axis, intensity, metadata=SpectrumMetadata(temperature_c=temperature_c)
        )

    return _factory
