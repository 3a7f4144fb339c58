"""Profile-retrieval results and GA checkpoints."""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, Field

from qpg_toolkit.model.process import DeltaBetaProfile


class GenerationStats(BaseModel):
    generation: int = Field(ge=0)
    best_mse: float
    median_mse: float
    evaluations: int = Field(ge=0)


class FitResult(BaseModel):
    """Best retrieved profile with its MSE trace.

    wall_time_s is kept in memory and in the run manifest only, so that two
    runs with the same seed serialize to identical JSON.
    """

    best_profile: DeltaBetaProfile
    best_mse: float
    trace: list[GenerationStats] = Field(default_factory=list)
    evaluations: int = Field(ge=0)
    seed: int
    converged: bool = False
    ga_config: dict[str, Any] = Field(default_factory=dict)
    wall_time_s: float = Field(default=0.0, exclude=True)


class Checkpoint(BaseModel):
    """Complete GA state after a finished generation."""

    generation: int = Field(ge=0)
    seed: int
    boundaries_mm: list[float]
    population: list[list[float]]
    mse: list[float]
    trace: list[GenerationStats]
    evaluations: int = Field(ge=0)
