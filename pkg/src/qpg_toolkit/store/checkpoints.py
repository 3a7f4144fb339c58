"""Per-generation GA checkpoints in a run directory."""

from __future__ import annotations

from pathlib import Path

from qpg_toolkit.model.fit import Checkpoint
from qpg_toolkit.store.artifacts import atomic_write_text

CHECKPOINT_DIR = "checkpoints"
LATEST = "latest.json"


class CheckpointStore:
    def __init__(self, run_dir: str | Path) -> None:
        self.dir = Path(run_dir) / CHECKPOINT_DIR
        self.dir.mkdir(parents=True, exist_ok=True)

    def path_for(self, generation: int) -> Path:
        return self.dir / f"gen_{generation:04d}.json"

    def save(self, checkpoint: Checkpoint) -> Path:
        text = checkpoint.model_dump_json()
        path = self.path_for(checkpoint.generation)
        atomic_write_text(path, text)
        atomic_write_text(self.dir / LATEST, text)
        return path

    def load(self, generation: int) -> Checkpoint:
        return Checkpoint.model_validate_json(self.path_for(generation).read_text())

    def load_latest(self) -> Checkpoint | None:
        path = self.dir / LATEST
        if not path.exists():
            return None
        return Checkpoint.model_validate_json(path.read_text())
