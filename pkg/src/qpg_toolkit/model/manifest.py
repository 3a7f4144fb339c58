"""Run manifest written next to every CLI run's outputs."""

from __future__ import annotations

import hashlib
import uuid
from datetime import datetime, timezone

from pydantic import BaseModel, Field


def _new_id() -> str:
    return str(uuid.uuid4())


def utcnow() -> datetime:
    return datetime.now(tz=timezone.utc)


def sha256_hex(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


class RunManifest(BaseModel):
    id: str = Field(default_factory=_new_id)
    subcommand: str
    config_hash: str | None = None
    input_digests: dict[str, str] = Field(default_factory=dict)
    seed: int | None = None
    tool_version: str
    started_at: datetime = Field(default_factory=utcnow)
    finished_at: datetime | None = None
    wall_time_s: float | None = None
    outputs: list[str] = Field(default_factory=list)
