"""Temperature-dependent Sellmeier backend.

Extended Sellmeier form per polarization axis, λ in µm and T in °C:

    n² = a1 + b1·F + (a2 + b2·F) / (λ² - (a3 + b3·F)²)
            + (a4 + b4·F) / (λ² - a5²) - a6·λ²
    F  = (T - T0)(T + T0 + temperature_offset)

The shipped defaults are the congruent LiNbO3 coefficients of
Edwards & Lawrence, Opt. Quantum Electron. 16, 373 (1984).
"""

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy.constants import c as SPEED_OF_LIGHT

from qpg_toolkit.dispersion.base import DispersionModel
from qpg_toolkit.errors import ConfigError, RangeError
from qpg_toolkit.model.process import Polarization

if TYPE_CHECKING:
    from qpg_toolkit.model.process import ProcessConfig


class SellmeierAxis(BaseModel):
    model_config = ConfigDict(frozen=True)

    a1: float
    a2: float = 0.0
    a3: float = 0.0
    a4: float = 0.0
    a5: float = 0.0
    a6: float = 0.0
    b1: float = 0.0
    b2: float = 0.0
    b3: float = 0.0
    b4: float = 0.0


class SellmeierParameters(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str = "custom"
    provenance: str = ""
    reference_temperature_c: float = 24.5
    temperature_offset: float = 546.0
    wavelength_range_um: tuple[float, float] = (0.4, 3.4)
    temperature_range_c: tuple[float, float] = (-20.0, 400.0)
    axes: dict[Polarization, SellmeierAxis] = Field(min_length=1)


class SellmeierModel(DispersionModel):
    """Bulk-index backend; the grating term is added by delta_beta."""

    def __init__(self, params: SellmeierParameters) -> None:
        self._params = params

    @property
    def params(self) -> SellmeierParameters:
        return self._params

    def _check_range(self, wavelength_um: np.ndarray, temperature_c: float) -> None:
        lo, hi = self._params.wavelength_range_um
        if np.any(wavelength_um < lo):
            raise RangeError("wavelength_min_um", float(np.min(wavelength_um)), lo)
        if np.any(wavelength_um > hi):
            raise RangeError("wavelength_max_um", float(np.max(wavelength_um)), hi)
        t_lo, t_hi = self._params.temperature_range_c
        if temperature_c < t_lo:
            raise RangeError("temperature_min_c", temperature_c, t_lo)
        if temperature_c > t_hi:
            raise RangeError("temperature_max_c", temperature_c, t_hi)

    def refractive_index(
        self, wavelength_um: float | np.ndarray, temperature_c: float, axis: Polarization
    ) -> np.ndarray:
        try:
            k = self._params.axes[axis]
        except KeyError:
            raise ConfigError(f"no Sellmeier coefficients for axis {axis!r}") from None
        lam = np.asarray(wavelength_um, dtype=float)
        self._check_range(lam, temperature_c)
        t0 = self._params.reference_temperature_c
        f = (temperature_c - t0) * (temperature_c + t0 + self._params.temperature_offset)
        lam2 = lam * lam
        n2 = (
            k.a1
            + k.b1 * f
            + (k.a2 + k.b2 * f) / (lam2 - (k.a3 + k.b3 * f) ** 2)
            + (k.a4 + k.b4 * f) / (lam2 - k.a5**2)
            - k.a6 * lam2
        )
        return np.sqrt(n2)

    def wavenumber(
        self, omega: float | np.ndarray, axis: Polarization, temperature_c: float
    ) -> np.ndarray:
        """k = n·ω/c in 1/m."""
        w = np.asarray(omega, dtype=float)
        lam_um = 2.0 * np.pi * SPEED_OF_LIGHT / w * 1e6
        return self.refractive_index(lam_um, temperature_c, axis) * w / SPEED_OF_LIGHT

    def wavevector_mismatch(
        self, config: ProcessConfig, omega_s: np.ndarray, omega_p: np.ndarray
    ) -> np.ndarray:
        t = config.temperature_c
        omega_o = omega_s + omega_p
        return (
            self.wavenumber(omega_s, config.signal_polarization, t)
            + self.wavenumber(omega_p, config.pump_polarization, t)
            - self.wavenumber(omega_o, config.output_polarization, t)
        )


def refractive_index(
    model: SellmeierModel, wavelength_nm: float | np.ndarray, temperature_c: float,
    axis: Polarization,
) -> np.ndarray:
    """Index of `axis` at a vacuum wavelength in nm."""
    wavelength_um = np.asarray(wavelength_nm, dtype=float) * 1e-3
    return model.refractive_index(wavelength_um, temperature_c, axis)


CONGRUENT_LINBO3 = SellmeierParameters(
    name="congruent LiNbO3",
    provenance="Edwards & Lawrence, Opt. Quantum Electron. 16, 373 (1984)",
    reference_temperature_c=24.5,
    temperature_offset=546.0,
    wavelength_range_um=(0.4, 3.4),
    temperature_range_c=(-20.0, 400.0),
    axes={
        "o": SellmeierAxis(
            a1=4.9048, a2=0.11775, a3=0.21802, a6=0.027153, b1=2.1429e-8, b2=2.2314e-8,
            b3=-2.9671e-8,
        ),
        "e": SellmeierAxis(
            a1=4.5820, a2=0.099169, a3=0.21090, a6=0.021940, b1=2.2971e-7, b2=5.2716e-8,
            b3=-4.9143e-8,
        ),
    },
)
