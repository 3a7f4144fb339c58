"""PyYAML loader → typed config dataclasses."""

from __future__ import annotations

import os
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Literal

import yaml
from pydantic import ValidationError

from qpg_toolkit.dispersion.sellmeier import SellmeierParameters
from qpg_toolkit.errors import ConfigError
from qpg_toolkit.model.modes import PumpEnvelope
from qpg_toolkit.model.process import ProcessConfig, ScanField

CONFIG_DIR_ENV = "QPG_CONFIG_DIR"
DEFAULT_CONFIG_NAME = "defaults.yaml"
_REPO_CONFIG_DIR = Path(__file__).parent.parent.parent / "config"


@dataclass
class DispersionConfig:
    backend: Literal["sellmeier", "taylor"] = "sellmeier"
    sellmeier: SellmeierParameters | None = None  # None -> congruent LiNbO3 defaults
    # TaylorDispersionModel fields; empty means expand the Sellmeier model at the process centre
    taylor: dict[str, float] = field(default_factory=dict)
    # taylor only: force k1_signal = k1_pump, and 1 drops the k2 terms
    group_velocity_matched: bool = False
    taylor_order: int = 2

    def __post_init__(self) -> None:
        if self.taylor_order not in (1, 2):
            raise ConfigError("dispersion.taylor_order must be 1 or 2")
        if self.backend == "sellmeier" and (self.group_velocity_matched or self.taylor_order != 2):
            raise ConfigError(
                "group_velocity_matched and taylor_order apply to the taylor backend only"
            )

    def echo(self) -> dict[str, Any]:
        return {
            "backend": self.backend,
            "sellmeier": None if self.sellmeier is None else self.sellmeier.model_dump(),
            "taylor": dict(self.taylor),
            "group_velocity_matched": self.group_velocity_matched,
            "taylor_order": self.taylor_order,
        }


@dataclass
class PumpConfig:
    order: int = 0
    center_nm: float | None = None  # None -> process pump wavelength
    sigma_nm: float = 2.12
    chirp_s2: float = 0.0

    def envelope(self, process: ProcessConfig) -> PumpEnvelope:
        center = self.center_nm if self.center_nm is not None else process.pump_wavelength_nm
        try:
            return PumpEnvelope(
                order=self.order, center_nm=center, sigma_nm=self.sigma_nm, chirp_s2=self.chirp_s2
            )
        except ValidationError as exc:
            raise ConfigError(f"invalid pump section: {exc}") from exc


@dataclass
class ScanConfig:
    field: ScanField = "signal"
    start_nm: float | None = None  # None -> centred on the phase-matching wavelength
    stop_nm: float | None = None
    points: int = 801
    span_fwhm: float = 6.0


@dataclass
class ResolutionConfig:
    sigma_nm: float = 0.0


@dataclass
class GridConfig:
    points: int = 512
    pump_span_sigmas: float = 5.0
    pm_span_widths: float = 8.0


@dataclass
class GaConfig:
    population_size: int = 100
    generations: int = 100
    tournament_size: int = 4
    sections: int = 14
    mutation_scale_per_m: float | None = None  # None -> 0.1 x bound
    crossover_rate: float = 0.9
    elite_count: int = 2
    refine_fraction: float = 0.1
    refine_every: int = 1
    refine_all: bool = False
    refine_max_iter: int = 20
    init_refine_max_iter: int = 20
    seed: int = 0
    delta_beta_bound_per_m: float | None = None  # None -> 5·2π/L
    mse_target: float = 0.0
    seed_uniform: bool = True
    workers: int = 1

    def __post_init__(self) -> None:
        if self.tournament_size < 2:
            raise ConfigError("ga.tournament_size must be >= 2")
        if self.population_size < self.tournament_size:
            raise ConfigError("ga.population_size must be >= ga.tournament_size")
        if self.sections < 1:
            raise ConfigError("ga.sections must be >= 1")
        if self.generations < 0:
            raise ConfigError("ga.generations must be >= 0")
        if not 1 <= self.elite_count < self.population_size:
            raise ConfigError("ga.elite_count must lie in [1, population_size)")
        if self.mutation_scale_per_m is not None and self.mutation_scale_per_m <= 0:
            raise ConfigError("ga.mutation_scale_per_m must be > 0")
        if self.delta_beta_bound_per_m is not None and self.delta_beta_bound_per_m <= 0:
            raise ConfigError("ga.delta_beta_bound_per_m must be > 0")
        if not 0.0 <= self.crossover_rate <= 1.0:
            raise ConfigError("ga.crossover_rate must lie in [0, 1]")
        if not 0.0 <= self.refine_fraction <= 1.0:
            raise ConfigError("ga.refine_fraction must lie in [0, 1]")
        if self.refine_every < 1 or self.workers < 1:
            raise ConfigError("ga.refine_every and ga.workers must be >= 1")

    def bound(self, length_m: float) -> float:
        if self.delta_beta_bound_per_m is not None:
            return self.delta_beta_bound_per_m
        return 5.0 * 2.0 * 3.141592653589793 / length_m

    def mutation_scale(self, length_m: float) -> float:
        if self.mutation_scale_per_m is not None:
            return self.mutation_scale_per_m
        return 0.1 * self.bound(length_m)

    def echo(self) -> dict[str, Any]:
        return asdict(self)


@dataclass
class BenchConfig:
    lengths_mm: list[float] = field(
        default_factory=lambda: [10.0, 20.0, 30.0, 40.0, 50.0, 60.0, 70.0, 80.0]
    )
    grid_points: int = 256
    sigma_search: tuple[float, float] = (0.1, 10.0)
    power_max_w: float = 0.2
    power_points: int = 201
    literature_path: str | None = None  # None -> config/literature_table.yaml
    dispersion: DispersionConfig | None = None  # None -> the top-level dispersion section


@dataclass
class AppConfig:
    process: ProcessConfig
    dispersion: DispersionConfig = field(default_factory=DispersionConfig)
    pump: PumpConfig = field(default_factory=PumpConfig)
    scan: ScanConfig = field(default_factory=ScanConfig)
    resolution: ResolutionConfig = field(default_factory=ResolutionConfig)
    grid: GridConfig = field(default_factory=GridConfig)
    ga: GaConfig = field(default_factory=GaConfig)
    bench: BenchConfig = field(default_factory=BenchConfig)
    source: Path | None = None

    @property
    def bench_dispersion(self) -> DispersionConfig:
        return self.bench.dispersion or self.dispersion

    def echo(self) -> dict[str, Any]:
        """JSON-ready dump of the effective configuration."""
        bench_dispersion = self.bench.dispersion
        return {
            "process": self.process.model_dump(),
            "dispersion": self.dispersion.echo(),
            "pump": asdict(self.pump),
            "scan": asdict(self.scan),
            "resolution": asdict(self.resolution),
            "grid": asdict(self.grid),
            "ga": self.ga.echo(),
            "bench": {
                **asdict(self.bench),
                "sigma_search": list(self.bench.sigma_search),
                "dispersion": None if bench_dispersion is None else bench_dispersion.echo(),
            },
        }


def default_config_dir() -> Path:
    env = os.getenv(CONFIG_DIR_ENV)
    return Path(env) if env else _REPO_CONFIG_DIR


def resolve_config_path(path: str | Path | None) -> Path:
    """Explicit paths must exist; bare names are also looked up in the config directory."""
    if path is None:
        return default_config_dir() / DEFAULT_CONFIG_NAME
    candidate = Path(path)
    if candidate.exists():
        return candidate
    fallback = default_config_dir() / candidate
    if not candidate.is_absolute() and fallback.exists():
        return fallback
    raise ConfigError(f"config file not found: {path}")


def load_config(path: str | Path | None = None) -> AppConfig:
    """Load a YAML config and return a typed AppConfig.

    Missing sections fall back to defaults; the process section is required.
    QPG_CONFIG_DIR overrides the default config directory.
    """
    resolved = resolve_config_path(path)
    try:
        with resolved.open() as f:
            raw: dict[str, Any] = yaml.safe_load(f) or {}
    except (OSError, yaml.YAMLError) as exc:
        raise ConfigError(f"cannot read config {resolved}: {exc}") from exc
    cfg = config_from_dict(raw)
    cfg.source = resolved
    return cfg


def _dispersion_from_dict(raw: dict[str, Any]) -> DispersionConfig:
    try:
        sellmeier_raw = raw.get("sellmeier")
        sellmeier = SellmeierParameters.model_validate(sellmeier_raw) if sellmeier_raw else None
    except ValidationError as exc:
        raise ConfigError(str(exc)) from exc
    return DispersionConfig(
        backend=raw.get("backend", "sellmeier"),
        sellmeier=sellmeier,
        taylor={k: float(v) for k, v in (raw.get("taylor") or {}).items()},
        group_velocity_matched=bool(raw.get("group_velocity_matched", False)),
        taylor_order=int(raw.get("taylor_order", 2)),
    )


def config_from_dict(raw: dict[str, Any]) -> AppConfig:
    process_raw = raw.get("process")
    if not process_raw:
        raise ConfigError("config has no process section")
    dispersion_raw = raw.get("dispersion", {})
    pump_raw = raw.get("pump", {})
    scan_raw = raw.get("scan", {})
    resolution_raw = raw.get("resolution", {})
    grid_raw = raw.get("grid", {})
    ga_raw = raw.get("ga", {})
    bench_raw = raw.get("bench", {})
    default_lengths = BenchConfig().lengths_mm
    try:
        sigma_lo, sigma_hi = bench_raw.get("sigma_search", (0.1, 10.0))
    except (TypeError, ValueError) as exc:
        raise ConfigError("bench.sigma_search must be a [low, high] pair") from exc

    try:
        process = ProcessConfig.model_validate(process_raw)
    except ValidationError as exc:
        raise ConfigError(str(exc)) from exc
    dispersion = _dispersion_from_dict(dispersion_raw)
    bench_dispersion_raw = bench_raw.get("dispersion")
    bench_dispersion = (
        _dispersion_from_dict(bench_dispersion_raw) if bench_dispersion_raw else None
    )

    try:
        return AppConfig(
            process=process,
            dispersion=dispersion,
            pump=PumpConfig(
                order=pump_raw.get("order", 0),
                center_nm=pump_raw.get("center_nm"),
                sigma_nm=pump_raw.get("sigma_nm", 2.12),
                chirp_s2=pump_raw.get("chirp_s2", 0.0),
            ),
            scan=ScanConfig(
                field=scan_raw.get("field", "signal"),
                start_nm=scan_raw.get("start_nm"),
                stop_nm=scan_raw.get("stop_nm"),
                points=scan_raw.get("points", 801),
                span_fwhm=scan_raw.get("span_fwhm", 6.0),
            ),
            resolution=ResolutionConfig(sigma_nm=resolution_raw.get("sigma_nm", 0.0)),
            grid=GridConfig(
                points=grid_raw.get("points", 512),
                pump_span_sigmas=grid_raw.get("pump_span_sigmas", 5.0),
                pm_span_widths=grid_raw.get("pm_span_widths", 8.0),
            ),
            ga=GaConfig(**ga_raw),
            bench=BenchConfig(
                lengths_mm=[float(v) for v in bench_raw.get("lengths_mm", default_lengths)],
                grid_points=bench_raw.get("grid_points", 256),
                sigma_search=(float(sigma_lo), float(sigma_hi)),
                power_max_w=bench_raw.get("power_max_w", 0.2),
                power_points=bench_raw.get("power_points", 201),
                literature_path=bench_raw.get("literature_path"),
                dispersion=bench_dispersion,
            ),
        )
    except TypeError as exc:
        raise ConfigError(f"unknown config key: {exc}") from exc
