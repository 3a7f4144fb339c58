"""Run-directory artifact store with atomic writes (temp file + rename)."""

from __future__ import annotations

import json
import os
import tempfile
import time
from pathlib import Path
from typing import Any

import structlog

from qpg_toolkit import __version__
from qpg_toolkit.model.manifest import RunManifest, sha256_hex, utcnow

logger = structlog.get_logger(__name__)

MANIFEST_NAME = "manifest.json"
CONFIG_ECHO_NAME = "config.json"


def atomic_write_text(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


class ArtifactStore:
    """Collects the outputs of one CLI run and writes its manifest last."""

    def __init__(self, root: str | Path, subcommand: str) -> None:
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self._manifest = RunManifest(subcommand=subcommand, tool_version=__version__)
        self._t0 = time.perf_counter()

    @property
    def manifest(self) -> RunManifest:
        return self._manifest

    def write_text(self, name: str, text: str) -> Path:
        path = self.root / name
        atomic_write_text(path, text)
        if name not in self._manifest.outputs:
            self._manifest.outputs.append(name)
        logger.debug("store.write", path=str(path), bytes=len(text))
        return path

    def write_json(self, name: str, obj: Any) -> Path:
        return self.write_text(name, canonical_json(obj))

    def record_config(self, echo: dict[str, Any]) -> None:
        text = canonical_json(echo)
        self.write_text(CONFIG_ECHO_NAME, text)
        self._manifest.config_hash = sha256_hex(text.encode())

    def record_input(self, path: str | Path) -> None:
        p = Path(path)
        self._manifest.input_digests[str(p)] = sha256_hex(p.read_bytes())

    def record_seed(self, seed: int) -> None:
        self._manifest.seed = seed

    def finalize(self) -> RunManifest:
        missing = [name for name in self._manifest.outputs if not (self.root / name).exists()]
        if missing:
            raise FileNotFoundError(f"declared outputs missing: {missing}")
        self._manifest.finished_at = utcnow()
        self._manifest.wall_time_s = time.perf_counter() - self._t0
        atomic_write_text(
            self.root / MANIFEST_NAME, self._manifest.model_dump_json(indent=2) + "\n"
        )
        logger.info("store.manifest", root=str(self.root), outputs=len(self._manifest.outputs))
        return self._manifest
