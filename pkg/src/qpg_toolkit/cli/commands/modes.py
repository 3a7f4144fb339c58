"""jsa / schmidt: joint spectral amplitude and its Schmidt analysis."""

from __future__ import annotations

import argparse
import io
from typing import Any

import numpy as np
import structlog

from qpg_toolkit.cli.context import (
    RunContext,
    add_common_arguments,
    add_pump_arguments,
    load_context,
)
from qpg_toolkit.inverse.io import read_profile
from qpg_toolkit.model.modes import JsaGrid
from qpg_toolkit.model.process import omega_to_wavelength_nm
from qpg_toolkit.modes.jsa import build_jsa, default_grids
from qpg_toolkit.modes.projection import extinction_ratio, projection_powers
from qpg_toolkit.modes.schmidt import schmidt_decompose, selectivity_report
from qpg_toolkit.viz.plots import plot_jsa

logger = structlog.get_logger(__name__)


def register(subparsers: argparse._SubParsersAction) -> None:
    jsa = subparsers.add_parser("jsa", help="compute the joint spectral amplitude grid")
    schmidt = subparsers.add_parser("schmidt", help="Schmidt decomposition and selectivity")
    for p in (jsa, schmidt):
        add_common_arguments(p)
        add_pump_arguments(p)
        p.add_argument("--profile", help="Δβ profile JSON (or a fit result)")
        p.add_argument("--points", type=int, help="grid points per axis")
    jsa.add_argument("--plot", action="store_true", help="also render jsi.svg")
    schmidt.add_argument("--modes", type=int, default=10, help="Schmidt modes to keep")
    schmidt.add_argument("--target-mode", type=int, default=0, help="selected mode m")
    schmidt.add_argument(
        "--write-modes", type=int, default=0, help="write CSVs of the leading N mode functions"
    )
    jsa.set_defaults(run=run_jsa)
    schmidt.set_defaults(run=run_schmidt)


def _jsa(ctx: RunContext, args: argparse.Namespace) -> JsaGrid:
    grid = ctx.app.grid
    pump = ctx.pump()
    axes = default_grids(
        ctx.process,
        ctx.model,
        pump,
        points=args.points or grid.points,
        pump_span_sigmas=grid.pump_span_sigmas,
        pm_span_widths=grid.pm_span_widths,
    )
    profile = read_profile(args.profile) if args.profile else None
    return build_jsa(ctx.process, ctx.model, pump, axes[0], axes[1], profile)


def format_jsa_csv(jsa: JsaGrid) -> str:
    """|JSA|² matrix: one row per signal sample, one column per output sample."""
    buf = io.StringIO()
    np.savetxt(
        buf,
        jsa.intensity,
        fmt="%.10e",
        delimiter=",",
        header="rows: signal axis, columns: output axis; axes in jsa_meta.json",
    )
    return buf.getvalue()


def jsa_sidecar(jsa: JsaGrid) -> dict[str, Any]:
    return {
        **jsa.metadata,
        "shape": list(jsa.amplitude.shape),
        "signal_omega": jsa.signal_axis.tolist(),
        "output_omega": jsa.output_axis.tolist(),
        "signal_nm": omega_to_wavelength_nm(jsa.signal_axis).tolist(),
        "output_nm": omega_to_wavelength_nm(jsa.output_axis).tolist(),
    }


def format_modes_csv(axis: np.ndarray, modes: np.ndarray, count: int) -> str:
    """omega,wavelength_nm then re_n,im_n for the leading `count` mode functions."""
    k = min(count, modes.shape[1])
    header = ["omega", "wavelength_nm"]
    for n in range(k):
        header += [f"re_{n}", f"im_{n}"]
    lines = [",".join(header)]
    wavelengths = omega_to_wavelength_nm(axis)
    for i, w in enumerate(axis):
        row = [f"{w:.17g}", f"{wavelengths[i]:.17g}"]
        for n in range(k):
            row += [f"{modes[i, n].real:.10e}", f"{modes[i, n].imag:.10e}"]
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def run_jsa(args: argparse.Namespace) -> int:
    ctx = load_context(args)
    jsa = _jsa(ctx, args)
    store = ctx.store(args, "jsa")
    store.write_text("jsa.csv", format_jsa_csv(jsa))
    store.write_json("jsa_meta.json", jsa_sidecar(jsa))
    if args.plot:
        store.write_text("jsi.svg", plot_jsa(jsa))
    store.finalize()
    logger.info("cli.jsa", out=args.out, points=jsa.signal_axis.size)
    return 0


def run_schmidt(args: argparse.Namespace) -> int:
    ctx = load_context(args)
    jsa = _jsa(ctx, args)
    decomposition = schmidt_decompose(jsa, args.modes)
    report = selectivity_report(decomposition, args.target_mode)

    pump = ctx.pump()
    grids = (jsa.signal_axis, jsa.output_axis)
    profile = read_profile(args.profile) if args.profile else None
    orders = sorted({pump.order, 0, 1})
    powers = dict(
        zip(orders, projection_powers(ctx.process, ctx.model, pump, orders, grids, profile))
    )
    doc = {
        "coefficients": np.asarray(decomposition.coefficients).tolist(),
        "schmidt_number": decomposition.schmidt_number,
        "norm": decomposition.norm,
        "target_mode": args.target_mode,
        "selectivity": report.selectivity,
        "selectivity_amplitude": report.amplitude_form,
        "extinction_from_selectivity_db": report.extinction_db_sqrt,
        "projection_powers": {str(k): v for k, v in powers.items()},
        "p1_over_p0": powers[1] / powers[0],
        "extinction_db": extinction_ratio(powers[1], powers[0]),
        "pump": pump.model_dump(),
    }
    store = ctx.store(args, "schmidt")
    store.write_json("schmidt.json", doc)
    if args.write_modes > 0:
        d = decomposition
        store.write_text(
            "signal_modes.csv", format_modes_csv(d.signal_axis, d.signal_modes, args.write_modes)
        )
        store.write_text(
            "output_modes.csv", format_modes_csv(d.output_axis, d.output_modes, args.write_modes)
        )
    store.finalize()
    logger.info(
        "cli.schmidt",
        out=args.out,
        schmidt_number=doc["schmidt_number"],
        selectivity=doc["selectivity"],
        extinction_db=doc["extinction_db"],
    )
    return 0
