"""Abstract base class for refractive-index / phase-mismatch backends."""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, ClassVar

import numpy as np

if TYPE_CHECKING:
    from qpg_toolkit.model.process import ProcessConfig


class DispersionModel(ABC):
    # True when the model's mismatch already contains the QPM grating term
    includes_grating: ClassVar[bool] = False

    @abstractmethod
    def wavevector_mismatch(
        self, config: ProcessConfig, omega_s: np.ndarray, omega_p: np.ndarray
    ) -> np.ndarray:
        """k_s + k_p - k_o (1/m) at ω_o = ω_s + ω_p, broadcasting over the inputs."""
        ...
