"""Ideal-device bandwidth and extinction ratio as a function of length."""

from __future__ import annotations

import math
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import structlog
from scipy.optimize import minimize_scalar

from qpg_toolkit.dispersion.base import DispersionModel
from qpg_toolkit.model.bench import SweepPoint
from qpg_toolkit.model.modes import PumpEnvelope
from qpg_toolkit.model.process import ProcessConfig
from qpg_toolkit.modes.jsa import default_grids, pm_output_width
from qpg_toolkit.modes.projection import extinction_ratio, projection_powers
from qpg_toolkit.phasematch.metrics import bandwidth
from qpg_toolkit.phasematch.spectrum import default_scan_axis, pm_spectrum

logger = structlog.get_logger(__name__)

_RATIO_FLOOR = 1e-300
_COARSE_POINTS = 9


def _ratio(
    config: ProcessConfig, model: DispersionModel, pump: PumpEnvelope, grid_points: int
) -> float:
    grids = default_grids(config, model, pump, points=grid_points)
    p0, p1 = projection_powers(config, model, pump, [0, 1], grids)
    return p1 / p0


def _best_sigma(
    config: ProcessConfig,
    model: DispersionModel,
    pump: PumpEnvelope,
    grid_points: int,
    sigma_range: tuple[float, float],
) -> float:
    """Pump σ_ω minimizing P1/P0 within `sigma_range`.

    A coarse log-spaced scan brackets the minimum; an interior bracket is
    refined with golden-section search, an edge minimum is returned as is.
    """
    lo, hi = sigma_range

    def log_ratio(log_sigma: float) -> float:
        trial = pump.with_sigma_omega(math.exp(log_sigma))
        return math.log10(max(_ratio(config, model, trial, grid_points), _RATIO_FLOOR))

    xs = np.linspace(math.log(lo), math.log(hi), _COARSE_POINTS)
    fs = np.array([log_ratio(float(x)) for x in xs])
    i = int(np.argmin(fs))
    if 0 < i < len(xs) - 1 and fs[i] < fs[i - 1] and fs[i] < fs[i + 1]:
        res = minimize_scalar(
            log_ratio,
            bracket=(float(xs[i - 1]), float(xs[i]), float(xs[i + 1])),
            method="golden",
            options={"xtol": 1e-4},
        )
        if float(res.fun) <= fs[i]:
            return math.exp(float(np.clip(res.x, xs[0], xs[-1])))
    return math.exp(float(xs[i]))


def _sweep_point(
    config: ProcessConfig,
    model: DispersionModel,
    pump: PumpEnvelope,
    grid_points: int,
    sigma_search: tuple[float, float] | None,
) -> SweepPoint:
    axis = default_scan_axis(config, model, "output")
    fwhm = bandwidth(pm_spectrum(config, model, axis, scan_field="output"), "fwhm")

    if sigma_search is not None:
        # bounds follow this length's own phase-matching width
        width = pm_output_width(config, model)
        if not math.isfinite(width):
            raise ValueError("phase-matching width is unbounded; cannot search pump width")
        sigma_range = (sigma_search[0] * width, sigma_search[1] * width)
        pump = pump.with_sigma_omega(_best_sigma(config, model, pump, grid_points, sigma_range))

    ratio = _ratio(config, model, pump, grid_points)
    point = SweepPoint(
        length_mm=config.length_mm,
        fwhm_nm=fwhm,
        extinction_db=extinction_ratio(ratio, 1.0),
        pump_sigma_nm=pump.sigma_nm,
        p1_over_p0=ratio,
    )
    logger.info(
        "bench.sweep_point",
        length_mm=point.length_mm,
        fwhm_nm=point.fwhm_nm,
        extinction_db=point.extinction_db,
        pump_sigma_nm=point.pump_sigma_nm,
    )
    return point


def sweep_length(
    template: ProcessConfig,
    model: DispersionModel,
    lengths_mm: Sequence[float],
    pump: PumpEnvelope,
    grid_points: int = 256,
    sigma_search: tuple[float, float] | None = (0.1, 10.0),
    workers: int = 1,
) -> list[SweepPoint]:
    """One SweepPoint per length, in input order.

    With `sigma_search` the Gaussian pump width is optimized per length over
    [lo, hi] times the phase-matching width of that length; None keeps the
    given pump.
    """
    if any(length <= 0 for length in lengths_mm):
        raise ValueError("lengths must be > 0")
    if sigma_search is not None and not 0 < sigma_search[0] < sigma_search[1]:
        raise ValueError("sigma_search must satisfy 0 < lo < hi")
    configs = [template.with_updates(length_mm=float(length)) for length in lengths_mm]

    def run(config: ProcessConfig) -> SweepPoint:
        return _sweep_point(config, model, pump.with_order(0), grid_points, sigma_search)

    if workers <= 1:
        return [run(c) for c in configs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run, configs))
