"""Bounded quasi-Newton refinement with central-difference gradients."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from qpg_toolkit.errors import QpgError

Objective = Callable[[np.ndarray], float]


class _NonFinite(Exception):
    pass


@dataclass
class _Best:
    x: np.ndarray
    value: float
    evaluations: int = 1


@dataclass(frozen=True)
class RefineResult:
    x: np.ndarray
    value: float
    evaluations: int
    iterations: int
    aborted: bool = False  # a non-finite objective value stopped the search


def local_refine(
    objective: Objective,
    x0: np.ndarray,
    bounds: tuple[float, float],
    max_iter: int = 20,
    rel_step: float = 1e-3,
) -> RefineResult:
    """L-BFGS-B descent inside the box; returns the best in-box iterate.

    The gradient step is rel_step times the box width. The returned value is
    never above objective(x0).
    """
    lo, hi = bounds
    x0 = np.clip(np.asarray(x0, dtype=float), lo, hi)
    f0 = float(objective(x0))
    if not np.isfinite(f0):
        raise QpgError("objective is not finite at the starting point")
    if max_iter <= 0:
        return RefineResult(x0, f0, 1, 0)

    h = rel_step * (hi - lo)
    best = _Best(x0.copy(), f0)

    def fun(x: np.ndarray) -> float:
        value = float(objective(x))
        best.evaluations += 1
        if not np.isfinite(value):
            raise _NonFinite
        if value < best.value and np.all(x >= lo) and np.all(x <= hi):
            best.x, best.value = x.copy(), value
        return value

    def jac(x: np.ndarray) -> np.ndarray:
        grad = np.empty_like(x)
        for i in range(x.size):
            step = np.zeros_like(x)
            step[i] = h
            grad[i] = (fun(x + step) - fun(x - step)) / (2.0 * h)
        return grad

    aborted = False
    iterations = 0
    try:
        res = minimize(
            fun,
            x0,
            jac=jac,
            method="L-BFGS-B",
            bounds=[(lo, hi)] * x0.size,
            options={
                "maxiter": max_iter,
                "ftol": 0.0,
                "gtol": 1e-12,
                "maxcor": max(10, x0.size),
            },
        )
        iterations = int(res.nit)
    except _NonFinite:
        aborted = True
    return RefineResult(
        x=best.x,
        value=best.value,
        evaluations=best.evaluations,
        iterations=iterations,
        aborted=aborted,
    )
