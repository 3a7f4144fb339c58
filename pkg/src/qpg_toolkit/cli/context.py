"""Shared CLI plumbing: config loading, overrides and model construction."""

from __future__ import annotations

import argparse
from dataclasses import dataclass, replace

import structlog
from pydantic import ValidationError

from qpg_toolkit.config import AppConfig, load_config
from qpg_toolkit.dispersion.base import DispersionModel
from qpg_toolkit.dispersion.factory import build_model
from qpg_toolkit.dispersion.mismatch import find_phase_matching
from qpg_toolkit.errors import ConfigError, QpgError
from qpg_toolkit.model.modes import PumpEnvelope
from qpg_toolkit.model.process import ProcessConfig
from qpg_toolkit.model.spectrum import ResolutionKernel
from qpg_toolkit.store.artifacts import ArtifactStore

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class RunContext:
    app: AppConfig
    model: DispersionModel

    @property
    def process(self) -> ProcessConfig:
        return self.app.process

    @property
    def kernel(self) -> ResolutionKernel:
        return ResolutionKernel(sigma=self.app.resolution.sigma_nm)

    def pump(self) -> PumpEnvelope:
        """Configured pump; its centre defaults to the phase-matched pump wavelength."""
        if self.app.pump.center_nm is not None:
            return self.app.pump.envelope(self.process)
        try:
            lam_o = find_phase_matching(self.process, self.model, "output")
            centre = 1.0 / (1.0 / lam_o - 1.0 / self.process.signal_wavelength_nm)
        except QpgError:
            centre = self.process.pump_wavelength_nm
        return replace(self.app.pump, center_nm=centre).envelope(self.process)

    def store(self, args: argparse.Namespace, subcommand: str) -> ArtifactStore:
        store = ArtifactStore(args.out, subcommand)
        store.record_config(self.app.echo())
        if self.app.source is not None:
            store.record_input(self.app.source)
        return store


def add_common_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="YAML config (default: $QPG_CONFIG_DIR/defaults.yaml)")
    parser.add_argument("--out", default="out", help="output directory")
    parser.add_argument("--length-mm", type=float, help="override process.length_mm")
    parser.add_argument("--temperature-c", type=float, help="override process.temperature_c")


def add_pump_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--pump-order", type=int, help="Hermite-Gaussian pump order")
    parser.add_argument("--pump-center-nm", type=float, help="pump centre wavelength")
    parser.add_argument("--pump-sigma-nm", type=float, help="pump 1/e amplitude half-width")


def load_context(args: argparse.Namespace) -> RunContext:
    app = load_config(args.config)
    changes: dict[str, float] = {}
    if getattr(args, "length_mm", None) is not None:
        changes["length_mm"] = args.length_mm
    if getattr(args, "temperature_c", None) is not None:
        changes["temperature_c"] = args.temperature_c
    if changes:
        try:
            app.process = app.process.with_updates(**changes)
        except ValidationError as exc:
            raise ConfigError(f"invalid process override: {exc}") from exc
    pump_changes = {
        name: getattr(args, f"pump_{name}")
        for name in ("order", "center_nm", "sigma_nm")
        if getattr(args, f"pump_{name}", None) is not None
    }
    if pump_changes:
        app.pump = replace(app.pump, **pump_changes)
    if getattr(args, "resolution_nm", None) is not None:
        app.resolution = replace(app.resolution, sigma_nm=args.resolution_nm)
    model = build_model(app.dispersion, app.process)
    logger.debug(
        "cli.context",
        config=str(app.source),
        backend=app.dispersion.backend,
        length_mm=app.process.length_mm,
        temperature_c=app.process.temperature_c,
    )
    return RunContext(app=app, model=model)
