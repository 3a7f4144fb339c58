"""Re-prediction of retrieved profiles under other operating conditions."""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np
import structlog

from qpg_toolkit.dispersion.base import DispersionModel
from qpg_toolkit.dispersion.mismatch import delta_beta
from qpg_toolkit.errors import ConfigError
from qpg_toolkit.model.process import DeltaBetaProfile, ProcessConfig, ScanField
from qpg_toolkit.model.spectrum import ResolutionKernel, Spectrum
from qpg_toolkit.phasematch.resolution import convolve_resolution
from qpg_toolkit.phasematch.spectrum import pm_spectrum

logger = structlog.get_logger(__name__)


def thermal_profile(
    config: ProcessConfig,
    model: DispersionModel,
    temperatures_c: Sequence[float],
    boundaries_mm: Sequence[float] | None = None,
) -> DeltaBetaProfile:
    """Additive Δβ profile of a non-uniform oven temperature.

    Section j carries Δβ(T_j) - Δβ(T_config) at the centre frequencies, so a
    uniform temperature equal to the configured one yields a zero profile.
    Sections are equal-length unless boundaries are given.
    """
    temps = [float(t) for t in temperatures_c]
    if not temps:
        raise ConfigError("temperature distribution is empty")
    if boundaries_mm is None:
        template = DeltaBetaProfile.uniform(config.length_mm, len(temps))
    else:
        template = DeltaBetaProfile(
            boundaries_mm=list(boundaries_mm), offsets_per_m=[0.0] * len(temps)
        )
    ws, wp = config.omega_signal, config.omega_pump
    nominal = float(delta_beta(config, model, ws, wp))
    offsets = [
        float(delta_beta(config.with_updates(temperature_c=t), model, ws, wp)) - nominal
        for t in temps
    ]
    return template.with_offsets(offsets)


def predict_at_conditions(
    profile: DeltaBetaProfile,
    from_config: ProcessConfig,
    to_config: ProcessConfig,
    model: DispersionModel,
    wavelengths_nm: np.ndarray,
    scan_field: ScanField = "signal",
    extra: DeltaBetaProfile | None = None,
    kernel: ResolutionKernel | None = None,
) -> Spectrum:
    """Spectrum of a retrieved profile evaluated at `to_config`.

    Fabrication offsets stay fixed; only the dispersion-model Δβ moves with
    temperature. `extra` is added on top (e.g. a thermal_profile).
    """
    if not math.isclose(from_config.length_mm, to_config.length_mm, rel_tol=1e-9):
        raise ConfigError("device length cannot change between conditions")
    combined = profile if extra is None else profile.combine(extra)
    logger.debug(
        "inverse.predict",
        from_temperature_c=from_config.temperature_c,
        to_temperature_c=to_config.temperature_c,
        sections=combined.sections,
    )
    spectrum = pm_spectrum(
        to_config, model, wavelengths_nm, combined, scan_field, normalize=kernel is None
    )
    if kernel is None:
        return spectrum
    return convolve_resolution(spectrum, kernel).normalized()
