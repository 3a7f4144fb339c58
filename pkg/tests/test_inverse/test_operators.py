"""Unit tests for the genetic operators and local refinement."""

from __future__ import annotations

from typing import Callable

import numpy as np
import pytest
from scipy.stats import chisquare

from qpg_toolkit.errors import QpgError
from qpg_toolkit.inverse.operators import crossover, mutate, tournament_select
from qpg_toolkit.inverse.refine import local_refine
from qpg_toolkit.model.process import DeltaBetaProfile


# ---------------------------------------------------------------------------
# Operators
# ---------------------------------------------------------------------------


def test_full_tournament_picks_best(rng: np.random.Generator) -> None:
    mse = np.array([0.5, 0.1, 0.3, 0.1, 0.9])
    for _ in range(20):
        assert tournament_select(mse, mse.size, rng) == 1


def test_tournament_size_checked(rng: np.random.Generator) -> None:
    with pytest.raises(ValueError, match="tournament size"):
        tournament_select(np.array([0.1, 0.2]), 3, rng)
    with pytest.raises(ValueError, match="empty"):
        tournament_select(np.array([]), 1, rng)


def test_single_entrant_tournament_is_uniform() -> None:
    rng = np.random.default_rng(2024)
    mse = np.linspace(0.1, 1.0, 10)
    picks = [tournament_select(mse, 1, rng) for _ in range(10_000)]
    counts = np.bincount(picks, minlength=mse.size)
    assert chisquare(counts).pvalue > 1e-3


def test_tournament_is_reproducible_for_a_seed() -> None:
    mse = np.array([0.4, 0.2, 0.9, 0.1, 0.6, 0.3])
    a, b = np.random.default_rng(11), np.random.default_rng(11)
    seq_a = [tournament_select(mse, 3, a) for _ in range(200)]
    seq_b = [tournament_select(mse, 3, b) for _ in range(200)]
    assert seq_a == seq_b
    assert len(set(seq_a)) > 1


def test_crossover_takes_each_section_from_a_parent(rng: np.random.Generator) -> None:
    a = np.zeros(10_000)
    b = np.ones(10_000)
    child = crossover(a, b, rng)
    assert set(np.unique(child)) <= {0.0, 1.0}
    assert child.mean() == pytest.approx(0.5, abs=0.03)


def test_crossover_keeps_profile_type(
    make_profile: Callable[..., DeltaBetaProfile], rng: np.random.Generator
) -> None:
    a = make_profile([1.0, 2.0, 3.0])
    b = make_profile([-1.0, -2.0, -3.0])
    child = crossover(a, b, rng)
    assert isinstance(child, DeltaBetaProfile)
    assert child.boundaries_mm == a.boundaries_mm
    assert all(abs(v) == i + 1 for i, v in enumerate(child.offsets_per_m))


def test_crossover_rejects_mismatched_parents(
    make_profile: Callable[..., DeltaBetaProfile], rng: np.random.Generator
) -> None:
    with pytest.raises(ValueError, match="section counts"):
        crossover(np.zeros(3), np.zeros(4), rng)
    with pytest.raises(ValueError, match="boundaries"):
        crossover(make_profile([0.0, 0.0]), make_profile([0.0, 0.0], length_mm=30.0), rng)


def test_mutation_statistics(rng: np.random.Generator) -> None:
    child = mutate(np.zeros(20_000), 2.0, rng)
    assert child.mean() == pytest.approx(0.0, abs=0.05)
    assert child.std() == pytest.approx(2.0, rel=0.03)


def test_mutation_clipped_to_bound(rng: np.random.Generator) -> None:
    child = mutate(np.full(1000, 9.5), 5.0, rng, bound=10.0)
    assert child.max() <= 10.0
    assert child.min() >= -10.0
    assert np.any(child == 10.0)


def test_mutation_scale_must_be_positive(rng: np.random.Generator) -> None:
    with pytest.raises(ValueError):
        mutate(np.zeros(3), 0.0, rng)


# ---------------------------------------------------------------------------
# local_refine
# ---------------------------------------------------------------------------


def _quadratic(centre: np.ndarray) -> Callable[[np.ndarray], float]:
    return lambda x: float(np.sum((x - centre) ** 2))


def test_refine_converges_on_quadratic() -> None:
    centre = np.array([1.5, -2.0, 0.25])
    result = local_refine(_quadratic(centre), np.zeros(3), (-10.0, 10.0), max_iter=50)
    assert np.allclose(result.x, centre, atol=1e-6)
    assert result.value < 1e-10
    assert result.evaluations > 1
    assert not result.aborted


def test_refine_respects_box() -> None:
    result = local_refine(_quadratic(np.array([20.0])), np.zeros(1), (-10.0, 10.0), 50)
    assert result.x[0] == pytest.approx(10.0)
    assert result.value == pytest.approx(100.0)


def test_stationary_start_is_kept() -> None:
    centre = np.array([0.5, 0.5])
    result = local_refine(_quadratic(centre), centre.copy(), (-1.0, 1.0))
    assert np.array_equal(result.x, centre)
    assert result.value == 0.0


def test_zero_iterations_returns_start() -> None:
    result = local_refine(_quadratic(np.ones(2)), np.array([30.0, 0.0]), (-10.0, 10.0), 0)
    assert np.array_equal(result.x, [10.0, 0.0])
    assert result.iterations == 0


def test_non_finite_start_raises() -> None:
    with pytest.raises(QpgError):
        local_refine(lambda x: float("nan"), np.zeros(2), (-1.0, 1.0))


def test_non_finite_midway_aborts_with_best_so_far() -> None:
    def objective(x: np.ndarray) -> float:
        return float("inf") if x[0] > 0.5 else float((x[0] - 5.0) ** 2)

    result = local_refine(objective, np.zeros(1), (-10.0, 10.0), max_iter=50)
    assert result.aborted
    assert result.value <= 25.0
    assert result.x[0] <= 0.5
