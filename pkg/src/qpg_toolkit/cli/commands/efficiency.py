"""efficiency: η_norm fit from depletion data, or closed-form curves."""

from __future__ import annotations

import argparse

import structlog

from qpg_toolkit.bench.curves import efficiency_curves, format_curves_csv, power_axis
from qpg_toolkit.cli.context import add_common_arguments, load_context
from qpg_toolkit.efficiency.fit import fit_eta_norm
from qpg_toolkit.efficiency.io import read_depletion_csv
from qpg_toolkit.efficiency.model import unit_efficiency_power
from qpg_toolkit.errors import ConfigError
from qpg_toolkit.model.literature import LiteratureEntry

logger = structlog.get_logger(__name__)

NAME = "efficiency"


def register(subparsers: argparse._SubParsersAction) -> None:
    p = subparsers.add_parser(NAME, help="fit η_norm or tabulate η(P)")
    add_common_arguments(p)
    p.add_argument("--data", help="depletion CSV (power_W,efficiency)")
    p.add_argument("--eta-norm", type=float, help="η_norm in 1/(W·cm²) for curve output")
    p.add_argument("--confidence", type=float, default=0.95)
    p.set_defaults(run=run)


def run(args: argparse.Namespace) -> int:
    ctx = load_context(args)
    length_cm = ctx.process.length_mm / 10.0
    if args.data is None and args.eta_norm is None:
        raise ConfigError("efficiency needs --data or --eta-norm")

    store = ctx.store(args, NAME)
    eta_norm = args.eta_norm
    if args.data is not None:
        points = read_depletion_csv(args.data)
        store.record_input(args.data)
        fit = fit_eta_norm(points, length_cm, args.confidence)
        store.write_text("eta_norm_fit.json", fit.model_dump_json(indent=2) + "\n")
        eta_norm = fit.eta_norm
        logger.info("cli.efficiency_fit", eta_norm=fit.eta_norm, stderr=fit.stderr)

    device = LiteratureEntry(
        length_mm=ctx.process.length_mm, eta_norm=eta_norm, citation="device"
    )
    bench = ctx.app.bench
    curves = efficiency_curves([device], power_axis(bench.power_max_w, bench.power_points))
    store.write_text("efficiency_curve.csv", format_curves_csv(curves))
    store.write_json(
        "summary.json",
        {
            "eta_norm": eta_norm,
            "length_cm": length_cm,
            "unit_efficiency_power_w": unit_efficiency_power(eta_norm, length_cm),
        },
    )
    store.finalize()
    return 0
