"""Benchmark sweep rows, efficiency curves and comparison rows."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

BandwidthFlag = Literal["broadened", "anomalous", "nominal"]


class SweepPoint(BaseModel):
    length_mm: float = Field(gt=0)
    fwhm_nm: float
    extinction_db: float
    pump_sigma_nm: float
    p1_over_p0: float


class EfficiencyCurve(BaseModel):
    citation: str
    eta_norm: float
    length_cm: float
    powers_w: list[float]
    efficiency: list[float]
    unit_power_w: float
    # (power_W, efficiency) of the reported measurement, if any
    measured: tuple[float, float] | None = None


class ComparisonRow(BaseModel):
    length_mm: float
    output_bandwidth_nm: float | None
    selectivity_db: float | None
    bandwidth_compression: float | None
    internal_efficiency: float | None
    eta_norm: float | None
    citation: str
    output_bandwidth_ghz: float | None = None
    derived_compression: float | None = None
    compression_consistent: bool | None = None
    ideal_bandwidth_nm: float | None = None
    bandwidth_flag: BandwidthFlag | None = None
    notes: str = ""
