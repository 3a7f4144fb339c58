"""Second-order Taylor backend.

Δβ is an exact polynomial in the detunings δ_s = ω_s - ω_s0 and
δ_p = ω_p - ω_p0 (δ_o = δ_s + δ_p) and carries the grating term inside
delta_beta_ref, so delta_beta does not add 2π/Λ again.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from qpg_toolkit.dispersion.base import DispersionModel

if TYPE_CHECKING:
    from qpg_toolkit.dispersion.sellmeier import SellmeierModel
    from qpg_toolkit.model.process import ProcessConfig


@dataclass(frozen=True)
class TaylorDispersionModel(DispersionModel):
    omega_signal: float
    omega_pump: float
    delta_beta_ref_per_m: float = 0.0
    # inverse group velocities k' (s/m) of signal, pump, output
    k1_signal: float = 0.0
    k1_pump: float = 0.0
    k1_output: float = 0.0
    # group-velocity dispersion k'' (s²/m)
    k2_signal: float = 0.0
    k2_pump: float = 0.0
    k2_output: float = 0.0
    thermal_slope_per_m_k: float = 0.0
    reference_temperature_c: float = 20.0

    includes_grating = True

    @property
    def omega_output(self) -> float:
        return self.omega_signal + self.omega_pump

    def wavevector_mismatch(
        self, config: ProcessConfig, omega_s: np.ndarray, omega_p: np.ndarray
    ) -> np.ndarray:
        ds = np.asarray(omega_s, dtype=float) - self.omega_signal
        dp = np.asarray(omega_p, dtype=float) - self.omega_pump
        do = ds + dp
        return (
            self.delta_beta_ref_per_m
            + self.k1_signal * ds + 0.5 * self.k2_signal * ds**2
            + self.k1_pump * dp + 0.5 * self.k2_pump * dp**2
            - self.k1_output * do - 0.5 * self.k2_output * do**2
            + self.thermal_slope_per_m_k * (config.temperature_c - self.reference_temperature_c)
        )

    @classmethod
    def expand(
        cls, model: SellmeierModel, config: ProcessConfig, rel_step: float = 2e-4
    ) -> TaylorDispersionModel:
        """Taylor model fitted to `model` at the configured centre frequencies.

        Derivatives come from central differences; the grating term of
        `config` is folded into delta_beta_ref_per_m.
        """
        t = config.temperature_c
        derivs: dict[str, tuple[float, float]] = {}
        centres = {
            "signal": (config.omega_signal, config.signal_polarization),
            "pump": (config.omega_pump, config.pump_polarization),
            "output": (config.omega_output, config.output_polarization),
        }
        for name, (w0, pol) in centres.items():
            h = rel_step * w0
            k_lo, k_0, k_hi = (
                float(model.wavenumber(w, pol, t)) for w in (w0 - h, w0, w0 + h)
            )
            derivs[name] = ((k_hi - k_lo) / (2 * h), (k_hi - 2 * k_0 + k_lo) / h**2)

        def material(temperature_c: float) -> float:
            cfg = config.with_updates(temperature_c=temperature_c)
            return float(
                model.wavevector_mismatch(
                    cfg, np.asarray(config.omega_signal), np.asarray(config.omega_pump)
                )
            )

        slope = material(t + 0.5) - material(t - 0.5)
        return cls(
            omega_signal=config.omega_signal,
            omega_pump=config.omega_pump,
            delta_beta_ref_per_m=material(t) + config.grating_vector_per_m,
            k1_signal=derivs["signal"][0],
            k1_pump=derivs["pump"][0],
            k1_output=derivs["output"][0],
            k2_signal=derivs["signal"][1],
            k2_pump=derivs["pump"][1],
            k2_output=derivs["output"][1],
            thermal_slope_per_m_k=slope,
            reference_temperature_c=t,
        )
