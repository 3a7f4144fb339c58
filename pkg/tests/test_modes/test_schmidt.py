"""Unit tests for the Schmidt decomposition and selectivity."""

from __future__ import annotations

import numpy as np
import pytest

from qpg_toolkit.errors import DecompositionError
from qpg_toolkit.model.modes import JsaGrid, SchmidtDecomposition
from qpg_toolkit.modes.schmidt import schmidt_decompose, selectivity, selectivity_report

AXIS = np.linspace(-10.0, 10.0, 201)


def _double_gaussian(a: float, b: float, axis: np.ndarray = AXIS) -> JsaGrid:
    x = axis[:, None]
    y = axis[None, :]
    return JsaGrid(axis, axis, np.exp(-a * (x + y) ** 2 - b * (x - y) ** 2))


def _thermal(mu: float, terms: int = 80) -> SchmidtDecomposition:
    rho = (1 - mu) * mu ** np.arange(terms)
    empty = np.zeros((1, terms))
    return SchmidtDecomposition(rho, empty, empty, np.zeros(1), np.zeros(1), norm=1.0)


def test_separable_jsa_has_single_mode() -> None:
    f = np.exp(-(AXIS**2))
    g = np.exp(-((AXIS - 1.0) ** 2) / 3.0) * np.exp(0.3j * AXIS)
    d = schmidt_decompose(JsaGrid(AXIS, AXIS, np.outer(f, g)))
    assert d.coefficients[0] == pytest.approx(1.0, abs=1e-9)
    assert np.all(d.coefficients[1:] < 1e-9)
    assert d.schmidt_number == pytest.approx(1.0, abs=1e-8)
    assert selectivity(d) == pytest.approx(1.0, abs=1e-9)


def test_double_gaussian_follows_thermal_law() -> None:
    d = schmidt_decompose(_double_gaussian(1.0, 0.25))
    mu = 1.0 / 9.0
    expected = (1 - mu) * mu ** np.arange(5)
    assert np.allclose(d.coefficients[:5], expected, rtol=0, atol=1e-6)
    assert d.schmidt_number == pytest.approx((1 + mu) / (1 - mu), rel=1e-5)


def test_grid_refinement_converges() -> None:
    coarse = schmidt_decompose(_double_gaussian(1.0, 0.25))
    fine = schmidt_decompose(_double_gaussian(1.0, 0.25, np.linspace(-10.0, 10.0, 401)))
    assert np.all(np.abs(coarse.coefficients[:5] - fine.coefficients[:5]) < 1e-4)


def test_reconstruction_rebuilds_jsa() -> None:
    jsa = _double_gaussian(1.0, 0.25)
    d = schmidt_decompose(jsa)
    rebuilt = d.norm * d.reconstruct()
    err = np.linalg.norm(rebuilt - jsa.amplitude) / np.linalg.norm(jsa.amplitude)
    assert err < 1e-8


def test_modes_orthonormal_under_grid_measure() -> None:
    d = schmidt_decompose(_double_gaussian(1.0, 0.25), n_modes=4)
    step = AXIS[1] - AXIS[0]
    w = np.full(AXIS.size, step)
    w[[0, -1]] *= 0.5
    gram = d.signal_modes.conj().T @ (d.signal_modes * w[:, None])
    assert np.allclose(gram, np.eye(4), atol=1e-9)
    assert d.signal_modes.shape == (AXIS.size, 4)
    assert d.reconstruct().shape == (AXIS.size, AXIS.size)


def test_zero_jsa_raises() -> None:
    with pytest.raises(DecompositionError):
        schmidt_decompose(JsaGrid(AXIS, AXIS, np.zeros((AXIS.size, AXIS.size))))


# ---------------------------------------------------------------------------
# Selectivity
# ---------------------------------------------------------------------------


def test_thermal_selectivity() -> None:
    d = _thermal(1.0 / 3.0)
    assert d.coefficients[0] == pytest.approx(2.0 / 3.0)
    assert selectivity(d, 0) == pytest.approx(4.0 / 9.0, abs=1e-9)


def test_unpopulated_mode_has_no_selectivity() -> None:
    d = _thermal(1e-4, terms=10)
    assert selectivity(d, 9) < 1e-12


def test_mode_index_out_of_range() -> None:
    with pytest.raises(ValueError, match="mode index"):
        selectivity(_thermal(0.5, terms=4), 4)


def test_report_carries_amplitude_form() -> None:
    report = selectivity_report(_thermal(1.0 / 3.0))
    rho = (2.0 / 3.0) * (1.0 / 3.0) ** np.arange(80)
    assert report.selectivity == pytest.approx(4.0 / 9.0)
    assert report.amplitude_form == pytest.approx(rho[0] / np.sqrt(rho).sum())
    assert report.schmidt_number == pytest.approx(2.0)
    assert report.extinction_db_sqrt == pytest.approx(-10 * np.log10(2.0 / 3.0))
