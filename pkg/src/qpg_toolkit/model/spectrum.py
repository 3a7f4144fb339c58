"""Sampled spectra and the instrument resolution kernel.

Spectra wrap numpy arrays, so they are frozen dataclasses with read-only
arrays rather than pydantic models.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Literal

import numpy as np

from qpg_toolkit.errors import AxisError
from qpg_toolkit.model.process import ScanField

AxisKind = Literal["wavelength", "frequency", "angular_frequency", "detuning"]

AXIS_UNITS: dict[str, str] = {
    "wavelength": "nm",
    "frequency": "THz",
    "angular_frequency": "rad/s",
    "detuning": "1/m",
}


def _frozen(values: np.ndarray) -> np.ndarray:
    out = np.array(values, copy=True)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class SpectrumMetadata:
    temperature_c: float | None = None
    device_id: str | None = None
    resolution_sigma: float = 0.0
    scan_field: ScanField | None = None


@dataclass(frozen=True)
class Spectrum:
    axis_kind: AxisKind
    axis: np.ndarray
    intensity: np.ndarray
    amplitude: np.ndarray | None = None
    metadata: SpectrumMetadata = field(default_factory=SpectrumMetadata)

    def __post_init__(self) -> None:
        axis = np.asarray(self.axis, dtype=float).reshape(-1)
        intensity = np.asarray(self.intensity, dtype=float).reshape(-1)
        if axis.shape != intensity.shape:
            raise AxisError(f"axis has {axis.size} samples, intensity {intensity.size}")
        if axis.size == 0:
            raise AxisError("empty spectrum")
        if axis.size > 1:
            steps = np.diff(axis)
            if not (np.all(steps > 0) or np.all(steps < 0)):
                raise AxisError("axis must be strictly monotone")
        if not np.all(np.isfinite(intensity)) or np.any(intensity < 0):
            raise ValueError("intensity must be finite and non-negative")
        object.__setattr__(self, "axis", _frozen(axis))
        object.__setattr__(self, "intensity", _frozen(intensity))
        if self.amplitude is not None:
            amp = np.asarray(self.amplitude, dtype=complex).reshape(-1)
            if amp.shape != intensity.shape:
                raise AxisError("amplitude and intensity sample counts differ")
            scale = max(1.0, float(intensity.max()))
            if not np.allclose(np.abs(amp) ** 2, intensity, rtol=0.0, atol=1e-12 * scale):
                raise ValueError("intensity must equal |amplitude|^2")
            object.__setattr__(self, "amplitude", _frozen(amp))

    @property
    def unit(self) -> str:
        return AXIS_UNITS[self.axis_kind]

    @property
    def size(self) -> int:
        return int(self.axis.size)

    def is_uniform(self, rtol: float = 1e-6) -> bool:
        if self.size < 3:
            return True
        steps = np.diff(self.axis)
        return bool(np.allclose(steps, steps[0], rtol=rtol, atol=0.0))

    def normalized(self) -> Spectrum:
        """Peak intensity scaled to 1 (all-zero spectra are returned unchanged)."""
        peak = float(self.intensity.max())
        if peak <= 0.0:
            return self
        amp = None if self.amplitude is None else self.amplitude / np.sqrt(peak)
        return replace(self, intensity=self.intensity / peak, amplitude=amp)

    def resample(self, new_axis: np.ndarray) -> Spectrum:
        """Linear interpolation of the intensity onto `new_axis`; amplitude is dropped."""
        order = np.argsort(self.axis)
        values = np.interp(new_axis, self.axis[order], self.intensity[order])
        return Spectrum(self.axis_kind, np.asarray(new_axis), values, None, self.metadata)


@dataclass(frozen=True)
class ResolutionKernel:
    """Gaussian instrument kernel exp(-x²/σ²), σ in axis units (1/e half-width)."""

    sigma: float = 0.0

    def __post_init__(self) -> None:
        if not np.isfinite(self.sigma) or self.sigma < 0:
            raise ValueError("kernel sigma must be finite and >= 0")
