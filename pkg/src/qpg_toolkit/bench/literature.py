"""Loader for the versioned literature benchmark table."""

from __future__ import annotations

from pathlib import Path

import yaml
from pydantic import ValidationError

from qpg_toolkit.config import default_config_dir
from qpg_toolkit.errors import ConfigError
from qpg_toolkit.model.literature import LiteratureDataset

LITERATURE_FILE = "literature_table.yaml"


def literature_path(path: str | Path | None = None) -> Path:
    return Path(path) if path is not None else default_config_dir() / LITERATURE_FILE


def load_literature(path: str | Path | None = None) -> LiteratureDataset:
    resolved = literature_path(path)
    try:
        raw = yaml.safe_load(resolved.read_text()) or {}
    except (OSError, yaml.YAMLError) as exc:
        raise ConfigError(f"cannot read literature table {resolved}: {exc}") from exc
    try:
        return LiteratureDataset.model_validate(raw)
    except ValidationError as exc:
        raise ConfigError(f"invalid literature table {resolved}: {exc}") from exc
