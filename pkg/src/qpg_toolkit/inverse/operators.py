"""Genetic operators on section-offset vectors (or profiles)."""

from __future__ import annotations

from typing import TypeVar

import numpy as np

from qpg_toolkit.model.process import DeltaBetaProfile

P = TypeVar("P", np.ndarray, DeltaBetaProfile)


def _values(x: np.ndarray | DeltaBetaProfile) -> np.ndarray:
    return x.offsets if isinstance(x, DeltaBetaProfile) else np.asarray(x, dtype=float)


def _like(template: P, values: np.ndarray) -> P:
    if isinstance(template, DeltaBetaProfile):
        return template.with_offsets(values)
    return values


def tournament_select(mse: np.ndarray, k: int, rng: np.random.Generator) -> int:
    """Index of the lowest-MSE candidate among k distinct uniform draws."""
    scores = np.asarray(mse, dtype=float)
    if scores.size == 0:
        raise ValueError("empty population")
    if not 1 <= k <= scores.size:
        raise ValueError(f"tournament size {k} outside 1..{scores.size}")
    entrants = rng.choice(scores.size, size=k, replace=False)
    return int(min(entrants, key=lambda i: (scores[i], i)))


def crossover(a: P, b: P, rng: np.random.Generator) -> P:
    """Uniform crossover: each section from a or b with probability 1/2."""
    va, vb = _values(a), _values(b)
    if va.shape != vb.shape:
        raise ValueError(f"section counts differ: {va.size} vs {vb.size}")
    if isinstance(a, DeltaBetaProfile) and isinstance(b, DeltaBetaProfile):
        if a.boundaries_mm != b.boundaries_mm:
            raise ValueError("profiles have different section boundaries")
    mask = rng.random(va.size) < 0.5
    return _like(a, np.where(mask, va, vb))


def mutate(p: P, scale: float, rng: np.random.Generator, bound: float = np.inf) -> P:
    """Independent Gaussian kick of std `scale` per section, clipped to ±bound."""
    if not scale > 0:
        raise ValueError("mutation scale must be > 0")
    v = _values(p)
    child = np.clip(v + rng.normal(0.0, scale, v.size), -bound, bound)
    return _like(p, child)
