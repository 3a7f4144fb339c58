"""Process description and piecewise Δβ profile models."""

from __future__ import annotations

import math
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from scipy.constants import c as SPEED_OF_LIGHT

Polarization = Literal["o", "e"]
ScanField = Literal["signal", "output"]

_ENERGY_RTOL = 1e-9


def wavelength_nm_to_omega(wavelength_nm: float | np.ndarray) -> np.ndarray:
    """Angular frequency (rad/s) of a vacuum wavelength in nm."""
    return 2.0 * math.pi * SPEED_OF_LIGHT / (np.asarray(wavelength_nm, dtype=float) * 1e-9)


def omega_to_wavelength_nm(omega: float | np.ndarray) -> np.ndarray:
    return 2.0 * math.pi * SPEED_OF_LIGHT / np.asarray(omega, dtype=float) * 1e9


class ProcessConfig(BaseModel):
    """Centre wavelengths, poling and device geometry of one SFG process."""

    model_config = ConfigDict(frozen=True)

    signal_wavelength_nm: float = Field(gt=0)
    pump_wavelength_nm: float = Field(gt=0)
    # derived from energy conservation when omitted
    output_wavelength_nm: float | None = Field(default=None, gt=0)
    poling_period_um: float = Field(gt=0)
    temperature_c: float
    length_mm: float = Field(gt=0)
    qpm_order: int = Field(default=1, ge=1)
    delta_beta_offset_per_m: float = 0.0
    width_sensitivity_per_m_um: float | None = Field(default=None, gt=0)
    critical_length_mm: float | None = Field(default=None, gt=0)
    signal_polarization: Polarization = "o"
    pump_polarization: Polarization = "e"
    output_polarization: Polarization = "o"

    @field_validator("qpm_order")
    @classmethod
    def _odd_order(cls, v: int) -> int:
        if v % 2 == 0:
            raise ValueError("qpm_order must be odd")
        return v

    @model_validator(mode="after")
    def _energy_conservation(self) -> ProcessConfig:
        expected = 1.0 / (1.0 / self.signal_wavelength_nm + 1.0 / self.pump_wavelength_nm)
        if self.output_wavelength_nm is None:
            object.__setattr__(self, "output_wavelength_nm", expected)
        elif abs(self.output_wavelength_nm - expected) > _ENERGY_RTOL * expected:
            raise ValueError(
                f"energy conservation violated: output {self.output_wavelength_nm} nm, "
                f"expected {expected:.12g} nm"
            )
        return self

    @property
    def length_m(self) -> float:
        return self.length_mm * 1e-3

    @property
    def grating_vector_per_m(self) -> float:
        return 2.0 * math.pi * self.qpm_order / (self.poling_period_um * 1e-6)

    @property
    def omega_signal(self) -> float:
        return float(wavelength_nm_to_omega(self.signal_wavelength_nm))

    @property
    def omega_pump(self) -> float:
        return float(wavelength_nm_to_omega(self.pump_wavelength_nm))

    @property
    def omega_output(self) -> float:
        # sum, not c/λ_o, so that energy conservation is exact
        return self.omega_signal + self.omega_pump

    def with_updates(self, **changes: object) -> ProcessConfig:
        """Copy with fields replaced; output wavelength is re-derived unless given."""
        data = self.model_dump()
        if "output_wavelength_nm" not in changes and (
            "signal_wavelength_nm" in changes or "pump_wavelength_nm" in changes
        ):
            data["output_wavelength_nm"] = None
        data.update(changes)
        return ProcessConfig.model_validate(data)


class DeltaBetaProfile(BaseModel):
    """Piecewise-constant Δβ offsets f_j (1/m) over section boundaries z_j (mm)."""

    model_config = ConfigDict(frozen=True)

    boundaries_mm: list[float] = Field(min_length=2)
    offsets_per_m: list[float] = Field(min_length=1)

    @model_validator(mode="after")
    def _check_sections(self) -> DeltaBetaProfile:
        b = self.boundaries_mm
        if len(b) != len(self.offsets_per_m) + 1:
            raise ValueError("need exactly one more boundary than offsets")
        if b[0] != 0.0:
            raise ValueError("first boundary must be 0")
        if any(hi <= lo for lo, hi in zip(b, b[1:])):
            raise ValueError("boundaries must be strictly increasing")
        if not all(math.isfinite(v) for v in self.offsets_per_m):
            raise ValueError("offsets must be finite")
        return self

    @classmethod
    def uniform(
        cls, length_mm: float, sections: int = 1, offsets: list[float] | np.ndarray | None = None
    ) -> DeltaBetaProfile:
        """Equal-length sections; zero offsets unless given."""
        if sections < 1:
            raise ValueError("sections must be >= 1")
        edges = [length_mm * j / sections for j in range(sections)] + [length_mm]
        values = [0.0] * sections if offsets is None else [float(v) for v in offsets]
        return cls(boundaries_mm=edges, offsets_per_m=values)

    @property
    def sections(self) -> int:
        return len(self.offsets_per_m)

    @property
    def length_mm(self) -> float:
        return self.boundaries_mm[-1]

    @property
    def section_lengths_m(self) -> np.ndarray:
        return np.diff(np.asarray(self.boundaries_mm, dtype=float)) * 1e-3

    @property
    def offsets(self) -> np.ndarray:
        return np.asarray(self.offsets_per_m, dtype=float)

    def with_offsets(self, offsets: np.ndarray | list[float]) -> DeltaBetaProfile:
        return DeltaBetaProfile(
            boundaries_mm=list(self.boundaries_mm), offsets_per_m=[float(v) for v in offsets]
        )

    def reversed(self) -> DeltaBetaProfile:
        """Same sections traversed from the far end."""
        total = self.length_mm
        edges = [total - z for z in reversed(self.boundaries_mm)]
        edges[0] = 0.0
        edges[-1] = total
        return DeltaBetaProfile(boundaries_mm=edges, offsets_per_m=self.offsets_per_m[::-1])

    def split(self, index: int, fraction: float = 0.5) -> DeltaBetaProfile:
        """Split section `index` in two sections carrying the same offset."""
        if not 0.0 < fraction < 1.0:
            raise ValueError("fraction must lie in (0, 1)")
        lo, hi = self.boundaries_mm[index], self.boundaries_mm[index + 1]
        edges = list(self.boundaries_mm)
        edges.insert(index + 1, lo + fraction * (hi - lo))
        values = list(self.offsets_per_m)
        values.insert(index, values[index])
        return DeltaBetaProfile(boundaries_mm=edges, offsets_per_m=values)

    def combine(self, other: DeltaBetaProfile) -> DeltaBetaProfile:
        """Sum of two profiles on the union of their boundaries."""
        if not math.isclose(self.length_mm, other.length_mm, rel_tol=1e-12):
            raise ValueError(
                f"profile lengths differ: {self.length_mm} mm vs {other.length_mm} mm"
            )
        edges = sorted(set(self.boundaries_mm[:-1]) | set(other.boundaries_mm[:-1]))
        edges.append(self.length_mm)
        mids = 0.5 * (np.asarray(edges[:-1]) + np.asarray(edges[1:]))
        values = self._value_at(mids) + other._value_at(mids)
        return DeltaBetaProfile(boundaries_mm=edges, offsets_per_m=values.tolist())

    def _value_at(self, z_mm: np.ndarray) -> np.ndarray:
        idx = np.searchsorted(np.asarray(self.boundaries_mm), z_mm, side="right") - 1
        idx = np.clip(idx, 0, self.sections - 1)
        return self.offsets[idx]

    def to_width_um(self, sensitivity_per_m_um: float | None) -> np.ndarray:
        """Equivalent waveguide-width deviation of every section."""
        from qpg_toolkit.dispersion.mismatch import delta_beta_to_width

        return np.asarray(delta_beta_to_width(self.offsets, sensitivity_per_m_um))
