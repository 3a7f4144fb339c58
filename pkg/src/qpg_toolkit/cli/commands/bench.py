"""bench: length sweep, literature efficiency curves and comparison table."""

from __future__ import annotations

import argparse
from dataclasses import replace

import structlog

from qpg_toolkit.bench.curves import efficiency_curves, format_curves_csv, power_axis
from qpg_toolkit.bench.literature import literature_path, load_literature
from qpg_toolkit.bench.report import comparison_report, format_report_csv, format_report_json
from qpg_toolkit.bench.sweep import sweep_length
from qpg_toolkit.cli.context import add_common_arguments, add_pump_arguments, load_context
from qpg_toolkit.dispersion.factory import build_model
from qpg_toolkit.dispersion.mismatch import estimate_fwhm_nm
from qpg_toolkit.model.bench import SweepPoint
from qpg_toolkit.viz.plots import plot_curves, plot_sweep

logger = structlog.get_logger(__name__)

NAME = "bench"
PARTS = ("sweep", "curves", "report")


def register(subparsers: argparse._SubParsersAction) -> None:
    p = subparsers.add_parser(NAME, help="benchmark sweeps and literature comparison")
    add_common_arguments(p)
    add_pump_arguments(p)
    p.add_argument("--only", choices=PARTS, action="append", help="run only these parts")
    p.add_argument("--lengths-mm", type=float, nargs="+", help="sweep lengths")
    p.add_argument("--literature", help="literature table YAML")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--plot", action="store_true", help="also render SVG plots")
    p.set_defaults(run=run)


def format_sweep_csv(points: list[SweepPoint]) -> str:
    lines = ["length_mm,fwhm_nm,extinction_db,pump_sigma_nm,p1_over_p0"]
    for s in points:
        lines.append(
            f"{s.length_mm:g},{s.fwhm_nm:.17g},{s.extinction_db:.17g},"
            f"{s.pump_sigma_nm:.17g},{s.p1_over_p0:.17g}"
        )
    return "\n".join(lines) + "\n"


def run(args: argparse.Namespace) -> int:
    ctx = load_context(args)
    bench = ctx.app.bench
    ideal_ctx = replace(ctx, model=build_model(ctx.app.bench_dispersion, ctx.process))
    parts = set(args.only or PARTS)
    store = ctx.store(args, NAME)

    if "sweep" in parts:
        lengths = args.lengths_mm or bench.lengths_mm
        points = sweep_length(
            ideal_ctx.process,
            ideal_ctx.model,
            lengths,
            ideal_ctx.pump(),
            bench.grid_points,
            bench.sigma_search,
            args.workers,
        )
        store.write_text("sweep.csv", format_sweep_csv(points))
        if args.plot:
            store.write_text("sweep.svg", plot_sweep(points))

    if parts & {"curves", "report"}:
        table = args.literature or bench.literature_path
        dataset = load_literature(table)
        store.record_input(literature_path(table))

        if "curves" in parts:
            curves = efficiency_curves(
                dataset.entries, power_axis(bench.power_max_w, bench.power_points)
            )
            store.write_text("efficiency_curves.csv", format_curves_csv(curves))
            store.write_json("efficiency_curves.json", [c.model_dump() for c in curves])
            if args.plot:
                store.write_text("efficiency_curves.svg", plot_curves(curves))

        if "report" in parts:
            process, model = ideal_ctx.process, ideal_ctx.model

            def ideal(length_mm: float) -> float:
                return estimate_fwhm_nm(process.with_updates(length_mm=length_mm), model, "output")

            rows = comparison_report(dataset, ideal_bandwidth_nm=ideal)
            store.write_text("comparison.csv", format_report_csv(rows))
            store.write_text("comparison.json", format_report_json(rows, dataset))

    store.finalize()
    logger.info("cli.bench", out=args.out, parts=sorted(parts))
    return 0
