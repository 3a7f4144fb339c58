"""fit-profile: retrieve a Δβ profile from a measured spectrum."""

from __future__ import annotations

import argparse
from dataclasses import replace

import structlog

from qpg_toolkit.cli.context import add_common_arguments, load_context
from qpg_toolkit.errors import ConfigError
from qpg_toolkit.inverse.ga import FitContext, run_fit
from qpg_toolkit.inverse.io import format_trace_csv
from qpg_toolkit.inverse.objective import SpectrumObjective
from qpg_toolkit.phasematch.io import format_spectrum_csv, read_spectrum_csv
from qpg_toolkit.store.checkpoints import CheckpointStore

logger = structlog.get_logger(__name__)

NAME = "fit-profile"

_GA_FLAGS = {
    "seed": "seed",
    "sections": "sections",
    "generations": "generations",
    "population": "population_size",
    "workers": "workers",
}


def register(subparsers: argparse._SubParsersAction) -> None:
    p = subparsers.add_parser(NAME, help="fit a piecewise Δβ profile to a measured spectrum")
    add_common_arguments(p)
    p.add_argument("measurement", help="measured spectrum CSV")
    p.add_argument("--seed", type=int)
    p.add_argument("--sections", type=int)
    p.add_argument("--generations", type=int)
    p.add_argument("--population", type=int)
    p.add_argument("--workers", type=int, help="threads for objective evaluation")
    p.add_argument("--resolution-nm", type=float, help="spectrometer 1/e half-width")
    p.add_argument(
        "--resume", action="store_true", help="continue from the latest checkpoint in --out"
    )
    p.set_defaults(run=run)


def run(args: argparse.Namespace) -> int:
    ctx = load_context(args)
    overrides = {
        field: getattr(args, flag)
        for flag, field in _GA_FLAGS.items()
        if getattr(args, flag) is not None
    }
    ga = replace(ctx.app.ga, **overrides)
    ctx.app.ga = ga

    measured = read_spectrum_csv(args.measurement)
    store = ctx.store(args, NAME)
    store.record_input(args.measurement)
    store.record_seed(ga.seed)

    checkpoints = CheckpointStore(args.out)
    resume = None
    if args.resume:
        resume = checkpoints.load_latest()
        if resume is None:
            raise ConfigError(f"no checkpoint to resume from in {args.out}")

    fit_context = FitContext(
        config=ctx.process, model=ctx.model, kernel=ctx.kernel, scan_field=ctx.app.scan.field
    )
    result = run_fit(measured, ga, fit_context, checkpoints, resume)

    objective = SpectrumObjective(
        measured, ctx.process, ctx.model, ctx.kernel, ctx.app.scan.field
    )
    best = objective.simulate(
        result.best_profile.section_lengths_m, result.best_profile.offsets
    )
    store.write_text("fit_result.json", result.model_dump_json(indent=2) + "\n")
    store.write_text("best_spectrum.csv", format_spectrum_csv(best))
    store.write_text("trace.csv", format_trace_csv(result.trace))
    store.finalize()
    logger.info(
        "cli.fit_profile",
        out=args.out,
        best_mse=result.best_mse,
        evaluations=result.evaluations,
        converged=result.converged,
    )
    return 0
