"""Pump envelope, JSA grid and Schmidt decomposition records."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy.constants import c as SPEED_OF_LIGHT

from qpg_toolkit.errors import AxisError
from qpg_toolkit.model.process import wavelength_nm_to_omega


class PumpEnvelope(BaseModel):
    """Hermite-Gaussian pump mode.

    sigma_nm is the 1/e amplitude half-width of the order-0 mode.
    """

    model_config = ConfigDict(frozen=True)

    order: int = Field(default=0, ge=0)
    center_nm: float = Field(gt=0)
    sigma_nm: float = Field(gt=0)
    chirp_s2: float = 0.0

    @property
    def omega_center(self) -> float:
        return float(wavelength_nm_to_omega(self.center_nm))

    @property
    def sigma_omega(self) -> float:
        """1/e amplitude half-width in rad/s at the centre wavelength."""
        lam = self.center_nm * 1e-9
        return 2.0 * np.pi * SPEED_OF_LIGHT * self.sigma_nm * 1e-9 / lam**2

    def with_order(self, order: int) -> PumpEnvelope:
        return self.model_copy(update={"order": order})

    def with_sigma_omega(self, sigma_omega: float) -> PumpEnvelope:
        lam = self.center_nm * 1e-9
        sigma_nm = sigma_omega * lam**2 / (2.0 * np.pi * SPEED_OF_LIGHT) * 1e9
        return self.model_copy(update={"sigma_nm": float(sigma_nm)})


def _frozen(values: np.ndarray, dtype: type) -> np.ndarray:
    out = np.array(values, dtype=dtype, copy=True)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class JsaGrid:
    """JSA sampled on (signal, output) angular frequencies; rows follow the signal axis."""

    signal_axis: np.ndarray
    output_axis: np.ndarray
    amplitude: np.ndarray
    metadata: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for name in ("signal_axis", "output_axis"):
            axis = np.asarray(getattr(self, name), dtype=float).reshape(-1)
            if axis.size > 1 and not np.all(np.diff(axis) > 0):
                raise AxisError(f"{name} must be strictly increasing")
            object.__setattr__(self, name, _frozen(axis, float))
        amp = np.asarray(self.amplitude, dtype=complex)
        if amp.shape != (self.signal_axis.size, self.output_axis.size):
            raise AxisError(
                f"amplitude shape {amp.shape} does not match axes "
                f"({self.signal_axis.size}, {self.output_axis.size})"
            )
        object.__setattr__(self, "amplitude", _frozen(amp, complex))

    @property
    def intensity(self) -> np.ndarray:
        return np.abs(self.amplitude) ** 2


@dataclass(frozen=True)
class SchmidtDecomposition:
    """Schmidt weights (descending, summing to 1) and grid-normalized mode functions.

    signal_modes[:, n] and output_modes[:, n] are orthonormal under the grid
    measure; the normalized JSA is sum_n sqrt(rho_n) u_n(ω_s) v_n(ω_o).
    """

    coefficients: np.ndarray
    signal_modes: np.ndarray
    output_modes: np.ndarray
    signal_axis: np.ndarray
    output_axis: np.ndarray
    norm: float
    metadata: dict[str, Any] = field(default_factory=dict)

    @property
    def schmidt_number(self) -> float:
        return float(1.0 / np.sum(self.coefficients**2))

    def reconstruct(self, modes: int | None = None) -> np.ndarray:
        """Normalized JSA rebuilt from the leading `modes` pairs (all by default)."""
        available = self.signal_modes.shape[1]
        k = available if modes is None else min(modes, available)
        weights = np.sqrt(self.coefficients[:k])
        return (self.signal_modes[:, :k] * weights) @ self.output_modes[:, :k].T
