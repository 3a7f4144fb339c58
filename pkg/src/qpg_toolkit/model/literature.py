"""Published QPG benchmark rows."""

from __future__ import annotations

from pydantic import BaseModel, Field, model_validator

_METRICS = (
    "output_bandwidth_nm",
    "selectivity_db",
    "bandwidth_compression",
    "internal_efficiency",
    "eta_norm",
)


class LiteratureEntry(BaseModel):
    length_mm: float = Field(gt=0)
    output_bandwidth_nm: float | None = Field(default=None, gt=0)
    selectivity_db: float | None = None
    bandwidth_compression: float | None = Field(default=None, gt=0)
    internal_efficiency: float | None = Field(default=None, ge=0, le=1)
    eta_norm: float | None = Field(default=None, gt=0)
    citation: str
    # pump power of the reported efficiency, when it is a single measured point
    measured_power_w: float | None = Field(default=None, ge=0)
    notes: str = ""

    @model_validator(mode="after")
    def _has_metric(self) -> LiteratureEntry:
        if all(getattr(self, name) is None for name in _METRICS):
            raise ValueError(f"entry {self.citation!r} carries no metric")
        return self

    @property
    def length_cm(self) -> float:
        return self.length_mm / 10.0


class LiteratureDataset(BaseModel):
    version: str
    input_bandwidth_ghz: float = Field(gt=0)
    output_center_nm: float = Field(gt=0)
    time_ordering_efficiency_cap: float = Field(ge=0, le=1)
    entries: list[LiteratureEntry] = Field(default_factory=list)

    def entry(self, citation: str) -> LiteratureEntry:
        for e in self.entries:
            if e.citation == citation:
                return e
        raise KeyError(citation)
