"""Build the configured dispersion backend."""

from __future__ import annotations

from dataclasses import replace
from typing import TYPE_CHECKING

from qpg_toolkit.dispersion.base import DispersionModel
from qpg_toolkit.dispersion.sellmeier import CONGRUENT_LINBO3, SellmeierModel
from qpg_toolkit.dispersion.taylor import TaylorDispersionModel
from qpg_toolkit.errors import ConfigError

if TYPE_CHECKING:
    from qpg_toolkit.config import DispersionConfig
    from qpg_toolkit.model.process import ProcessConfig


def idealize(
    model: TaylorDispersionModel, group_velocity_matched: bool = True, order: int = 1
) -> TaylorDispersionModel:
    """Taylor model with the signal moved onto the pump group velocity and/or k2 dropped."""
    changes: dict[str, float] = {}
    if group_velocity_matched:
        changes["k1_signal"] = model.k1_pump
    if order == 1:
        changes.update(k2_signal=0.0, k2_pump=0.0, k2_output=0.0)
    return replace(model, **changes)


def build_model(cfg: DispersionConfig, process: ProcessConfig) -> DispersionModel:
    sellmeier = SellmeierModel(cfg.sellmeier or CONGRUENT_LINBO3)
    if cfg.backend == "sellmeier":
        return sellmeier
    if cfg.backend == "taylor":
        if not cfg.taylor:
            model = TaylorDispersionModel.expand(sellmeier, process)
        else:
            try:
                model = TaylorDispersionModel(**cfg.taylor)
            except TypeError as exc:
                raise ConfigError(f"invalid taylor parameters: {exc}") from exc
        return idealize(model, cfg.group_velocity_matched, cfg.taylor_order)
    raise ConfigError(f"unknown dispersion backend {cfg.backend!r}")
