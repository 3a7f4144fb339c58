"""Tests for profile retrieval: objective, GA runs, checkpoints and re-prediction."""

from __future__ import annotations

import dataclasses
import json
from pathlib import Path
from typing import Callable

import numpy as np
import pytest
from scipy.signal import find_peaks

from qpg_toolkit.config import GaConfig
from qpg_toolkit.dispersion.sellmeier import SellmeierModel
from qpg_toolkit.dispersion.taylor import TaylorDispersionModel
from qpg_toolkit.errors import AxisError, ConfigError, ParseError
from qpg_toolkit.inverse.ga import FitContext, run_fit
from qpg_toolkit.inverse.io import format_trace_csv, read_profile
from qpg_toolkit.inverse.objective import SpectrumObjective, objective_mse
from qpg_toolkit.inverse.predict import predict_at_conditions, thermal_profile
from qpg_toolkit.model.process import DeltaBetaProfile, ProcessConfig
from qpg_toolkit.model.spectrum import Spectrum
from qpg_toolkit.phasematch.spectrum import default_scan_axis, pm_spectrum
from qpg_toolkit.store.checkpoints import CheckpointStore

SMALL_GA = GaConfig(
    population_size=8,
    generations=4,
    tournament_size=3,
    sections=1,
    elite_count=2,
    refine_fraction=0.25,
    refine_max_iter=10,
    init_refine_max_iter=10,
    seed=7,
)


@pytest.fixture
def measured(
    process_config: ProcessConfig,
    taylor_model: TaylorDispersionModel,
    make_profile: Callable[..., DeltaBetaProfile],
) -> Spectrum:
    axis = default_scan_axis(process_config, taylor_model, "signal", points=201, span_fwhm=3.0)
    return pm_spectrum(process_config, taylor_model, axis, make_profile([200.0]))


@pytest.fixture
def context(process_config: ProcessConfig, taylor_model: TaylorDispersionModel) -> FitContext:
    return FitContext(process_config, taylor_model)


# ---------------------------------------------------------------------------
# Objective
# ---------------------------------------------------------------------------


def test_objective_vanishes_at_true_profile(
    measured: Spectrum,
    process_config: ProcessConfig,
    taylor_model: TaylorDispersionModel,
    make_profile: Callable[..., DeltaBetaProfile],
) -> None:
    assert objective_mse(make_profile([200.0]), measured, process_config, taylor_model) < 1e-20
    assert objective_mse(make_profile([0.0]), measured, process_config, taylor_model) > 1e-3


def test_objective_rejects_non_wavelength_axis(
    process_config: ProcessConfig,
    taylor_model: TaylorDispersionModel,
    make_spectrum: Callable[..., Spectrum],
) -> None:
    detuning = make_spectrum(axis=np.linspace(-1.0, 1.0, 11), axis_kind="detuning")
    with pytest.raises(AxisError):
        SpectrumObjective(detuning, process_config, taylor_model)


# ---------------------------------------------------------------------------
# run_fit
# ---------------------------------------------------------------------------


def test_single_section_offset_recovered(measured: Spectrum, context: FitContext) -> None:
    result = run_fit(measured, SMALL_GA, context)
    assert result.best_profile.offsets_per_m[0] == pytest.approx(200.0, abs=5.0)
    assert result.best_mse < 1e-6
    assert result.seed == 7
    assert result.evaluations > 0


def test_trace_best_never_increases(measured: Spectrum, context: FitContext) -> None:
    ga = dataclasses.replace(SMALL_GA, sections=3, generations=5)
    result = run_fit(measured, ga, context)
    best = [s.best_mse for s in result.trace]
    assert [s.generation for s in result.trace] == list(range(6))
    assert all(b <= a for a, b in zip(best, best[1:]))
    assert result.best_mse == best[-1]
    flat = objective_mse(
        DeltaBetaProfile.uniform(20.0, 3), measured, context.config, context.model
    )
    assert result.best_mse <= flat


def test_same_seed_is_reproducible_across_workers(
    measured: Spectrum, context: FitContext
) -> None:
    ga = dataclasses.replace(SMALL_GA, sections=2, generations=3)
    serial = run_fit(measured, ga, context)
    threaded = run_fit(measured, dataclasses.replace(ga, workers=2), context)
    assert serial.best_profile == threaded.best_profile
    assert serial.trace == threaded.trace
    assert serial.evaluations == threaded.evaluations


def test_mse_target_stops_early(measured: Spectrum, context: FitContext) -> None:
    ga = dataclasses.replace(SMALL_GA, generations=50, mse_target=1e-3)
    result = run_fit(measured, ga, context)
    assert result.converged
    assert len(result.trace) < 51


def test_resume_matches_uninterrupted_run(
    tmp_path: Path, measured: Spectrum, context: FitContext
) -> None:
    ga = dataclasses.replace(SMALL_GA, sections=2, generations=4)
    store = CheckpointStore(tmp_path)
    full = run_fit(measured, ga, context, checkpoints=store)
    assert store.load_latest() is not None

    resumed = run_fit(measured, ga, context, resume=store.load(2))
    assert resumed.best_profile == full.best_profile
    assert resumed.trace == full.trace
    assert resumed.evaluations == full.evaluations


def test_resume_rejects_other_seed(
    tmp_path: Path, measured: Spectrum, context: FitContext
) -> None:
    store = CheckpointStore(tmp_path)
    run_fit(measured, dataclasses.replace(SMALL_GA, generations=1), context, checkpoints=store)
    other = dataclasses.replace(SMALL_GA, seed=8)
    with pytest.raises(ConfigError, match="checkpoint"):
        run_fit(measured, other, context, resume=store.load(1))


def test_trace_csv_header(measured: Spectrum, context: FitContext) -> None:
    result = run_fit(measured, dataclasses.replace(SMALL_GA, generations=1), context)
    lines = format_trace_csv(result.trace).splitlines()
    assert lines[0] == "generation,best_mse,median_mse,evaluations"
    assert len(lines) == 3


# ---------------------------------------------------------------------------
# Round trips
# ---------------------------------------------------------------------------


def _wide_measurement(
    config: ProcessConfig, model: TaylorDispersionModel, profile: DeltaBetaProfile
) -> Spectrum:
    axis = default_scan_axis(config, model, "signal", points=201, span_fwhm=6.0)
    return pm_spectrum(config, model, axis, profile)


@pytest.mark.slow
def test_three_section_round_trip(
    process_config: ProcessConfig,
    taylor_model: TaylorDispersionModel,
    make_profile: Callable[..., DeltaBetaProfile],
    context: FitContext,
) -> None:
    truth = make_profile([150.0, -100.0, 50.0])
    measured = _wide_measurement(process_config, taylor_model, truth)
    ga = GaConfig(population_size=40, generations=30, sections=3, seed=3)
    result = run_fit(measured, ga, context)
    assert result.best_mse <= 1e-6


@pytest.mark.slow
def test_fourteen_section_round_trip_with_noise(
    process_config: ProcessConfig,
    taylor_model: TaylorDispersionModel,
    make_profile: Callable[..., DeltaBetaProfile],
    context: FitContext,
    rng: np.random.Generator,
) -> None:
    truth = make_profile(np.linspace(-120.0, 120.0, 14))
    clean = _wide_measurement(process_config, taylor_model, truth)
    noise = 1.0 + 0.01 * rng.normal(size=clean.size)
    noisy = dataclasses.replace(clean, intensity=clean.intensity * noise, amplitude=None)
    ga = GaConfig(population_size=60, generations=40, sections=14, seed=5)
    result = run_fit(noisy, ga, context)
    assert result.best_mse <= 1e-4


def test_reversed_profile_has_same_mse(
    measured: Spectrum, context: FitContext, make_profile: Callable[..., DeltaBetaProfile]
) -> None:
    result = run_fit(measured, dataclasses.replace(SMALL_GA, sections=3, generations=2), context)
    objective = SpectrumObjective(measured, context.config, context.model)
    best = result.best_profile
    assert objective(best.reversed()) == pytest.approx(objective(best), abs=1e-10)
    skewed = make_profile([150.0, -100.0, 50.0])
    assert objective(skewed.reversed()) == pytest.approx(objective(skewed), abs=1e-10)
    assert objective(skewed) > 1e-6


# ---------------------------------------------------------------------------
# Profile files
# ---------------------------------------------------------------------------


def test_read_profile_accepts_fit_result(
    tmp_path: Path, measured: Spectrum, context: FitContext
) -> None:
    result = run_fit(measured, dataclasses.replace(SMALL_GA, generations=1), context)
    path = tmp_path / "fit_result.json"
    path.write_text(result.model_dump_json())
    assert read_profile(path) == result.best_profile
    assert "wall_time_s" not in json.loads(path.read_text())


def test_read_profile_errors(tmp_path: Path) -> None:
    bad_json = tmp_path / "a.json"
    bad_json.write_text("{\n  oops")
    with pytest.raises(ParseError):
        read_profile(bad_json)
    bad_profile = tmp_path / "b.json"
    bad_profile.write_text(json.dumps({"boundaries_mm": [0.0, 10.0], "offsets_per_m": []}))
    with pytest.raises(ParseError, match="profile"):
        read_profile(bad_profile)


# ---------------------------------------------------------------------------
# Re-prediction
# ---------------------------------------------------------------------------


def test_thermal_profile_zero_at_nominal(
    design_config: ProcessConfig, sellmeier_model: SellmeierModel
) -> None:
    profile = thermal_profile(design_config, sellmeier_model, [200.0, 200.0, 200.0])
    assert profile.sections == 3
    assert np.allclose(profile.offsets, 0.0, atol=1e-9)


def test_thermal_profile_sign_follows_temperature(
    design_config: ProcessConfig, sellmeier_model: SellmeierModel
) -> None:
    profile = thermal_profile(
        design_config, sellmeier_model, [190.0, 210.0], boundaries_mm=[0.0, 30.0, 71.0]
    )
    cold, hot = profile.offsets
    assert cold * hot < 0
    assert profile.boundaries_mm == [0.0, 30.0, 71.0]


def test_empty_temperature_list_rejected(
    design_config: ProcessConfig, sellmeier_model: SellmeierModel
) -> None:
    with pytest.raises(ConfigError):
        thermal_profile(design_config, sellmeier_model, [])


def test_prediction_at_same_conditions_is_forward_model(
    process_config: ProcessConfig,
    taylor_model: TaylorDispersionModel,
    make_profile: Callable[..., DeltaBetaProfile],
) -> None:
    profile = make_profile([120.0, -40.0, 0.0])
    axis = np.linspace(1548.0, 1552.0, 201)
    predicted = predict_at_conditions(
        profile, process_config, process_config, taylor_model, axis
    )
    direct = pm_spectrum(process_config, taylor_model, axis, profile)
    assert np.allclose(predicted.intensity, direct.intensity, rtol=1e-12, atol=1e-15)


def test_step_profile_produces_secondary_peak(
    process_config: ProcessConfig,
    taylor_model: TaylorDispersionModel,
    make_profile: Callable[..., DeltaBetaProfile],
) -> None:
    axis = np.linspace(1544.0, 1552.0, 1601)
    predicted = predict_at_conditions(
        make_profile([0.0]),
        process_config,
        process_config,
        taylor_model,
        axis,
        extra=make_profile([0.0, 1500.0]),
    )
    peaks, _ = find_peaks(np.asarray(predicted.intensity))
    heights = np.sort(np.asarray(predicted.intensity)[peaks])[::-1]
    assert heights[0] == pytest.approx(1.0)
    assert heights[1] > 0.1


def test_prediction_rejects_length_change(
    process_config: ProcessConfig,
    taylor_model: TaylorDispersionModel,
    make_profile: Callable[..., DeltaBetaProfile],
) -> None:
    with pytest.raises(ConfigError, match="length"):
        predict_at_conditions(
            make_profile(),
            process_config,
            process_config.with_updates(length_mm=30.0),
            taylor_model,
            np.array([1550.0]),
        )
