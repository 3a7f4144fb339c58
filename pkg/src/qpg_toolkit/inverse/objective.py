"""Spectrum MSE objective for profile retrieval."""

from __future__ import annotations

import numpy as np

from qpg_toolkit.dispersion.base import DispersionModel
from qpg_toolkit.dispersion.mismatch import delta_beta, scan_omegas
from qpg_toolkit.errors import AxisError
from qpg_toolkit.model.process import DeltaBetaProfile, ProcessConfig, ScanField
from qpg_toolkit.model.spectrum import ResolutionKernel, Spectrum
from qpg_toolkit.phasematch.amplitude import pm_sections
from qpg_toolkit.phasematch.resolution import convolve_resolution


class SpectrumObjective:
    """MSE between simulated and measured peak-normalized spectra.

    The global Δβ along the simulation axis does not depend on the profile
    and is computed once.
    """

    def __init__(
        self,
        measured: Spectrum,
        config: ProcessConfig,
        model: DispersionModel,
        kernel: ResolutionKernel | None = None,
        scan_field: ScanField | None = None,
    ) -> None:
        if measured.axis_kind != "wavelength":
            raise AxisError(
                f"measured spectrum must be on a wavelength axis, got {measured.axis_kind}"
            )
        self.measured = measured.normalized()
        self.config = config
        self.kernel = kernel or ResolutionKernel()
        self.scan_field: ScanField = scan_field or measured.metadata.scan_field or "signal"
        axis = np.asarray(self.measured.axis)
        if self.measured.is_uniform() and axis[-1] > axis[0]:
            self.sim_axis = axis
        else:
            self.sim_axis = np.linspace(axis.min(), axis.max(), axis.size)
        ws, wp = scan_omegas(config, self.scan_field, self.sim_axis)
        self._dbeta = delta_beta(config, model, ws, wp)
        self._target = np.asarray(self.measured.intensity)

    def simulate(self, lengths_m: np.ndarray, offsets: np.ndarray) -> Spectrum:
        """Convolved simulation resampled onto the measurement axis, peak-normalized."""
        amp = pm_sections(lengths_m, offsets, self._dbeta)
        sim = Spectrum("wavelength", self.sim_axis, np.abs(amp) ** 2)
        sim = convolve_resolution(sim, self.kernel)
        if not np.array_equal(sim.axis, self.measured.axis):
            sim = sim.resample(self.measured.axis)
        return sim.normalized()

    def evaluate(self, lengths_m: np.ndarray, offsets: np.ndarray) -> float:
        sim = self.simulate(lengths_m, offsets)
        diff = np.asarray(sim.intensity) - self._target
        return float(np.mean(diff * diff))

    def __call__(self, profile: DeltaBetaProfile) -> float:
        return self.evaluate(profile.section_lengths_m, profile.offsets)


def objective_mse(
    profile: DeltaBetaProfile,
    measured: Spectrum,
    config: ProcessConfig,
    model: DispersionModel,
    kernel: ResolutionKernel | None = None,
    scan_field: ScanField | None = None,
) -> float:
    return SpectrumObjective(measured, config, model, kernel, scan_field)(profile)
