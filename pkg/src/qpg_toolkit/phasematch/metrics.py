"""Bandwidth of the main spectral lobe."""

from __future__ import annotations

import math
from typing import Literal

import numpy as np

from qpg_toolkit.errors import BandwidthError
from qpg_toolkit.model.spectrum import Spectrum

BandwidthMetric = Literal["fwhm", "one_over_e"]


def _crossing(x: np.ndarray, y: np.ndarray, peak: int, level: float, direction: int) -> float:
    i = peak
    while 0 <= i + direction < y.size:
        j = i + direction
        if y[j] < level:
            # linear interpolation between samples i and j
            t = (y[i] - level) / (y[i] - y[j])
            return float(x[i] + t * (x[j] - x[i]))
        i = j
    side = "left" if direction < 0 else "right"
    raise BandwidthError(f"no {side} crossing of level {level:g} inside the axis")


def bandwidth(spectrum: Spectrum, metric: BandwidthMetric = "fwhm") -> float:
    """FWHM, or the 1/e half-width, of the lobe around the global maximum (axis units)."""
    y = np.asarray(spectrum.intensity)
    x = np.asarray(spectrum.axis)
    peak = int(np.argmax(y))
    top = float(y[peak])
    if top <= 0.0:
        raise BandwidthError("spectrum is identically zero")
    ties = np.flatnonzero(y == top)
    if ties.size > 1 and np.any(np.diff(ties) > 1):
        raise BandwidthError("global maximum is not unique")
    level = top / 2.0 if metric == "fwhm" else top / math.e
    left = _crossing(x, y, peak, level, -1)
    right = _crossing(x, y, peak, level, +1)
    width = abs(right - left)
    return width if metric == "fwhm" else width / 2.0
