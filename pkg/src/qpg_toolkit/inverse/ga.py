"""Genetic algorithm with quasi-Newton refinement for Δβ-profile retrieval.

Flow per run: random population inside the box → refine every candidate →
loop { elites + tournament/crossover/mutation children → evaluate →
refine the best fraction } until the generation limit or the MSE target.

Every child of generation g draws from its own generator seeded with
(seed, g, index), so results do not depend on evaluation order or on the
number of worker threads, and a run resumed from a checkpoint continues
exactly as the uninterrupted run would.
"""

from __future__ import annotations

import math
import time
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import TypeVar

import numpy as np
import structlog

from qpg_toolkit.config import GaConfig
from qpg_toolkit.dispersion.base import DispersionModel
from qpg_toolkit.errors import ConfigError
from qpg_toolkit.inverse.objective import SpectrumObjective
from qpg_toolkit.inverse.operators import crossover, mutate, tournament_select
from qpg_toolkit.inverse.refine import RefineResult, local_refine
from qpg_toolkit.model.fit import Checkpoint, FitResult, GenerationStats
from qpg_toolkit.model.process import DeltaBetaProfile, ProcessConfig, ScanField
from qpg_toolkit.model.spectrum import ResolutionKernel, Spectrum
from qpg_toolkit.store.checkpoints import CheckpointStore

logger = structlog.get_logger(__name__)

T = TypeVar("T")
R = TypeVar("R")


@dataclass(frozen=True)
class FitContext:
    config: ProcessConfig
    model: DispersionModel
    kernel: ResolutionKernel = field(default_factory=ResolutionKernel)
    scan_field: ScanField | None = None


def candidate_rng(seed: int, generation: int, index: int) -> np.random.Generator:
    return np.random.default_rng([seed, generation, index])


def _parallel_map(fn: Callable[[T], R], items: Iterable[T], workers: int) -> list[R]:
    if workers <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _stats(generation: int, mse: np.ndarray, evaluations: int) -> GenerationStats:
    return GenerationStats(
        generation=generation,
        best_mse=float(mse.min()),
        median_mse=float(np.median(mse)),
        evaluations=evaluations,
    )


def _check_critical_length(config: ProcessConfig, template: DeltaBetaProfile) -> None:
    limit = config.critical_length_mm
    longest = float(np.max(np.diff(template.boundaries_mm)))
    if limit is not None and longest > limit:
        logger.warning(
            "fit.section_exceeds_critical_length",
            section_mm=longest,
            critical_length_mm=limit,
        )


def run_fit(
    measured: Spectrum,
    ga: GaConfig,
    context: FitContext,
    checkpoints: CheckpointStore | None = None,
    resume: Checkpoint | None = None,
) -> FitResult:
    t0 = time.perf_counter()
    config = context.config
    objective = SpectrumObjective(
        measured, config, context.model, context.kernel, context.scan_field
    )
    template = DeltaBetaProfile.uniform(config.length_mm, ga.sections)
    lengths = template.section_lengths_m
    bound = ga.bound(config.length_m)
    scale = ga.mutation_scale(config.length_m)
    _check_critical_length(config, template)

    def evaluate(x: np.ndarray) -> float:
        return objective.evaluate(lengths, x)

    def refiner(max_iter: int) -> Callable[[np.ndarray], RefineResult]:
        return lambda x: local_refine(evaluate, x, (-bound, bound), max_iter)

    log = logger.bind(seed=ga.seed, sections=ga.sections, population=ga.population_size)

    if resume is not None:
        if resume.seed != ga.seed or resume.boundaries_mm != template.boundaries_mm:
            raise ConfigError("checkpoint does not match the seed or section layout")
        population = np.asarray(resume.population, dtype=float)
        mse = np.asarray(resume.mse, dtype=float)
        trace = list(resume.trace)
        evaluations = resume.evaluations
        start = resume.generation
        log.info("fit.resume", generation=start, best_mse=float(mse.min()))
    else:
        rows = []
        for i in range(ga.population_size):
            if i == 0 and ga.seed_uniform:
                rows.append(np.zeros(ga.sections))
            else:
                rows.append(candidate_rng(ga.seed, 0, i).uniform(-bound, bound, ga.sections))
        refined = _parallel_map(refiner(ga.init_refine_max_iter), rows, ga.workers)
        population = np.array([r.x for r in refined])
        mse = np.array([r.value for r in refined])
        evaluations = sum(r.evaluations for r in refined)
        trace = [_stats(0, mse, evaluations)]
        start = 0
        if checkpoints is not None:
            checkpoints.save(_checkpoint(0, ga, template, population, mse, trace, evaluations))
        log.info("fit.init", best_mse=trace[-1].best_mse, evaluations=evaluations)

    n_children = ga.population_size - ga.elite_count
    n_refine = ga.population_size if ga.refine_all else math.ceil(
        ga.refine_fraction * ga.population_size
    )

    for generation in range(start + 1, ga.generations + 1):
        if float(mse.min()) <= ga.mse_target:
            break
        order = np.argsort(mse, kind="stable")
        elites = population[order[: ga.elite_count]]
        elite_mse = mse[order[: ga.elite_count]]

        children = []
        for i in range(n_children):
            rng = candidate_rng(ga.seed, generation, i)
            a = population[tournament_select(mse, ga.tournament_size, rng)]
            b = population[tournament_select(mse, ga.tournament_size, rng)]
            child = crossover(a, b, rng) if rng.random() < ga.crossover_rate else a.copy()
            children.append(mutate(child, scale, rng, bound))
        child_mse = _parallel_map(evaluate, children, ga.workers)
        evaluations += n_children

        population = np.vstack([elites, np.asarray(children)])
        mse = np.concatenate([elite_mse, np.asarray(child_mse)])

        if n_refine > 0 and generation % ga.refine_every == 0:
            picks = np.argsort(mse, kind="stable")[:n_refine]
            refined = _parallel_map(
                refiner(ga.refine_max_iter), [population[i] for i in picks], ga.workers
            )
            for i, r in zip(picks, refined):
                population[i] = r.x
                mse[i] = r.value
            evaluations += sum(r.evaluations for r in refined)

        trace.append(_stats(generation, mse, evaluations))
        if checkpoints is not None:
            checkpoints.save(
                _checkpoint(generation, ga, template, population, mse, trace, evaluations)
            )
        log.info(
            "fit.generation",
            generation=generation,
            best_mse=trace[-1].best_mse,
            median_mse=trace[-1].median_mse,
        )

    best = int(np.argmin(mse))
    result = FitResult(
        best_profile=template.with_offsets(population[best]),
        best_mse=float(mse[best]),
        trace=trace,
        evaluations=evaluations,
        seed=ga.seed,
        converged=ga.mse_target > 0 and float(mse[best]) <= ga.mse_target,
        ga_config=ga.echo(),
        wall_time_s=time.perf_counter() - t0,
    )
    log.info("fit.done", best_mse=result.best_mse, evaluations=evaluations)
    return result


def _checkpoint(
    generation: int,
    ga: GaConfig,
    template: DeltaBetaProfile,
    population: np.ndarray,
    mse: np.ndarray,
    trace: list[GenerationStats],
    evaluations: int,
) -> Checkpoint:
    return Checkpoint(
        generation=generation,
        seed=ga.seed,
        boundaries_mm=list(template.boundaries_mm),
        population=population.tolist(),
        mse=mse.tolist(),
        trace=list(trace),
        evaluations=evaluations,
    )
