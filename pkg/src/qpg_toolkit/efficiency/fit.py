"""η_norm extraction from depletion measurements."""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np
import structlog
from scipy import stats
from scipy.optimize import least_squares

from qpg_toolkit.efficiency.model import conversion_efficiency
from qpg_toolkit.errors import FitDataError
from qpg_toolkit.model.efficiency import EfficiencyPoint, EtaNormFit

logger = structlog.get_logger(__name__)


def invert_eta_norm(point: EfficiencyPoint, length_cm: float) -> float:
    """Closed-form η_norm from one point, on the first quarter-wave."""
    if point.power_w <= 0 or length_cm <= 0:
        raise FitDataError("single-point inversion needs power > 0 and length > 0")
    return (math.asin(math.sqrt(point.efficiency)) / length_cm) ** 2 / point.power_w


def fit_eta_norm(
    points: Sequence[EfficiencyPoint], length_cm: float, confidence: float = 0.95
) -> EtaNormFit:
    """Least-squares fit of sin²(√(η_norm·P)·L) with a t-distribution interval."""
    powers = np.array([p.power_w for p in points], dtype=float)
    eff = np.array([p.efficiency for p in points], dtype=float)
    if length_cm <= 0:
        raise FitDataError("length must be > 0")
    if np.unique(powers[powers > 0]).size < 2:
        raise FitDataError("need at least 2 points with distinct non-zero pump powers")

    # start from the lowest-power non-trivial point
    usable = [p for p in points if p.power_w > 0 and 0 < p.efficiency < 1]
    if not usable:
        raise FitDataError("no point with 0 < efficiency < 1")
    start = invert_eta_norm(min(usable, key=lambda p: p.power_w), length_cm)

    def residuals(x: np.ndarray) -> np.ndarray:
        return conversion_efficiency(abs(float(x[0])), powers, length_cm) - eff

    result = least_squares(
        residuals, x0=[start], method="lm", xtol=1e-15, ftol=1e-15, gtol=1e-15
    )
    estimate = abs(float(result.x[0]))
    resid = result.fun
    dof = max(powers.size - 1, 1)
    s2 = float(resid @ resid) / dof
    jac = result.jac
    jtj = float(jac[:, 0] @ jac[:, 0])
    stderr = math.sqrt(s2 / jtj) if jtj > 0 else math.inf
    half = float(stats.t.ppf(0.5 + confidence / 2.0, dof)) * stderr

    ambiguous = bool(np.any(np.sqrt(estimate * powers) * length_cm > math.pi / 2))
    if ambiguous:
        logger.warning(
            "efficiency.ambiguous_branch",
            eta_norm=estimate,
            max_power_w=float(powers.max()),
            length_cm=length_cm,
        )
    return EtaNormFit(
        eta_norm=estimate,
        ci_low=estimate - half,
        ci_high=estimate + half,
        stderr=stderr,
        residual_rms=math.sqrt(float(resid @ resid) / powers.size),
        points=int(powers.size),
        length_cm=length_cm,
        ambiguous_branch=ambiguous,
    )
