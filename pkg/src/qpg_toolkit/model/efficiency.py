"""Depletion measurements and η_norm fit results."""

from __future__ import annotations

from pydantic import BaseModel, Field


class EfficiencyPoint(BaseModel):
    power_w: float = Field(ge=0)
    efficiency: float = Field(ge=0, le=1)


class EtaNormFit(BaseModel):
    eta_norm: float
    ci_low: float
    ci_high: float
    stderr: float
    residual_rms: float
    points: int
    length_cm: float
    # True when a point lies beyond the first quarter-wave of sin²
    ambiguous_branch: bool = False
