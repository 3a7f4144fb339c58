"""Spectrometer-resolution convolution.

The kernel is exp(-x²/σ²) (σ = 1/e half-width), i.e. a Gaussian of
standard deviation σ/√2. Boundaries use half-sample reflection
(d c b a | a b c d), which conserves the summed intensity exactly as long
as the truncated kernel is shorter than the axis.
"""

from __future__ import annotations

import math
from dataclasses import replace

import numpy as np
from scipy.ndimage import gaussian_filter1d

from qpg_toolkit.errors import AxisError
from qpg_toolkit.model.spectrum import ResolutionKernel, Spectrum, SpectrumMetadata

_TRUNCATE = 5.0


def convolve_resolution(spectrum: Spectrum, kernel: ResolutionKernel) -> Spectrum:
    if kernel.sigma == 0.0 or spectrum.size < 2:
        return spectrum
    if not spectrum.is_uniform():
        raise AxisError("convolution needs a uniform axis; resample the spectrum first")
    step = abs(float(spectrum.axis[1] - spectrum.axis[0]))
    sigma_bins = kernel.sigma / math.sqrt(2.0) / step
    smoothed = gaussian_filter1d(
        np.asarray(spectrum.intensity), sigma_bins, mode="reflect", truncate=_TRUNCATE
    )
    meta = spectrum.metadata
    combined = math.hypot(meta.resolution_sigma, kernel.sigma)
    return replace(
        spectrum,
        intensity=smoothed,
        amplitude=None,
        metadata=SpectrumMetadata(
            temperature_c=meta.temperature_c,
            device_id=meta.device_id,
            resolution_sigma=combined,
            scan_field=meta.scan_field,
        ),
    )
