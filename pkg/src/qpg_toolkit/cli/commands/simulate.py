"""simulate-pm: phase-matching spectrum of an ideal or profiled device."""

from __future__ import annotations

import argparse

import numpy as np
import structlog

from qpg_toolkit.cli.context import add_common_arguments, load_context
from qpg_toolkit.inverse.io import read_profile
from qpg_toolkit.phasematch.io import format_spectrum_csv
from qpg_toolkit.phasematch.metrics import bandwidth
from qpg_toolkit.phasematch.resolution import convolve_resolution
from qpg_toolkit.phasematch.spectrum import default_scan_axis, pm_spectrum
from qpg_toolkit.viz.plots import plot_spectrum

logger = structlog.get_logger(__name__)

NAME = "simulate-pm"


def register(subparsers: argparse._SubParsersAction) -> None:
    p = subparsers.add_parser(NAME, help="simulate a phase-matching spectrum")
    add_common_arguments(p)
    p.add_argument("--profile", help="Δβ profile JSON (or a fit result)")
    p.add_argument("--resolution-nm", type=float, help="spectrometer 1/e half-width")
    p.add_argument("--plot", action="store_true", help="also render spectrum.svg")
    p.set_defaults(run=run)


def run(args: argparse.Namespace) -> int:
    ctx = load_context(args)
    app, cfg = ctx.app, ctx.process
    field = app.scan.field
    if app.scan.start_nm is not None and app.scan.stop_nm is not None:
        axis = np.linspace(app.scan.start_nm, app.scan.stop_nm, app.scan.points)
    else:
        axis = default_scan_axis(cfg, ctx.model, field, app.scan.points, app.scan.span_fwhm)
    profile = read_profile(args.profile) if args.profile else None

    spectrum = pm_spectrum(cfg, ctx.model, axis, profile, field, normalize=False)
    spectrum = convolve_resolution(spectrum, ctx.kernel).normalized()

    store = ctx.store(args, NAME)
    if args.profile:
        store.record_input(args.profile)
    store.write_text("spectrum.csv", format_spectrum_csv(spectrum))
    summary = {
        "scan_field": field,
        "fwhm_nm": bandwidth(spectrum, "fwhm"),
        "one_over_e_nm": bandwidth(spectrum, "one_over_e"),
        "peak_nm": float(spectrum.axis[int(np.argmax(spectrum.intensity))]),
        "sections": 1 if profile is None else profile.sections,
    }
    store.write_json("summary.json", summary)
    if args.plot:
        store.write_text("spectrum.svg", plot_spectrum(spectrum))
    store.finalize()
    logger.info("cli.simulate_pm", out=args.out, **summary)
    return 0
