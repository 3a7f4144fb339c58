"""SVG rendering of spectra, JSI grids and benchmark curves (requires the plot extra)."""

from __future__ import annotations

import io
from collections.abc import Sequence
from typing import Any

import numpy as np

from qpg_toolkit.errors import QpgError
from qpg_toolkit.model.bench import EfficiencyCurve, SweepPoint
from qpg_toolkit.model.modes import JsaGrid
from qpg_toolkit.model.process import omega_to_wavelength_nm
from qpg_toolkit.model.spectrum import Spectrum


def _pyplot() -> Any:
    try:
        import matplotlib
    except ImportError as exc:
        raise QpgError("plotting needs matplotlib: pip install 'qpg-toolkit[plot]'") from exc
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    plt.rcParams["svg.hashsalt"] = "qpg"
    return plt


def _svg(fig: Any) -> str:
    buf = io.StringIO()
    fig.savefig(buf, format="svg", metadata={"Date": None})
    return buf.getvalue()


def plot_spectrum(spectrum: Spectrum) -> str:
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(spectrum.axis, spectrum.intensity, lw=1.2)
    ax.set_xlabel(f"{spectrum.axis_kind} ({spectrum.unit})")
    ax.set_ylabel("normalized intensity")
    text = _svg(fig)
    plt.close(fig)
    return text


def plot_jsa(jsa: JsaGrid) -> str:
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(5, 5))
    signal_nm = omega_to_wavelength_nm(jsa.signal_axis)
    output_nm = omega_to_wavelength_nm(jsa.output_axis)
    ax.pcolormesh(output_nm, signal_nm, np.asarray(jsa.intensity), shading="auto")
    ax.set_xlabel("output wavelength (nm)")
    ax.set_ylabel("signal wavelength (nm)")
    text = _svg(fig)
    plt.close(fig)
    return text


def plot_sweep(points: Sequence[SweepPoint]) -> str:
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6, 4))
    lengths = [p.length_mm for p in points]
    ax.plot(lengths, [p.fwhm_nm for p in points], "o-", color="tab:blue")
    ax.set_xlabel("length (mm)")
    ax.set_ylabel("FWHM (nm)", color="tab:blue")
    twin = ax.twinx()
    twin.plot(lengths, [p.extinction_db for p in points], "s-", color="tab:red")
    twin.set_ylabel("extinction (dB)", color="tab:red")
    text = _svg(fig)
    plt.close(fig)
    return text


def plot_curves(curves: Sequence[EfficiencyCurve]) -> str:
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6, 4))
    for curve in curves:
        ax.plot(np.asarray(curve.powers_w) * 1e3, curve.efficiency, label=curve.citation)
        if curve.measured is not None:
            power, eta = curve.measured
            ax.plot([power * 1e3], [eta], "o", color="green")
    ax.set_xlabel("pump power (mW)")
    ax.set_ylabel("conversion efficiency")
    ax.set_ylim(0, 1.05)
    ax.legend(fontsize="small")
    text = _svg(fig)
    plt.close(fig)
    return text
