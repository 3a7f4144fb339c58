"""Unit tests for the run-directory artifact store and GA checkpoints."""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

import pytest

from qpg_toolkit import __version__
from qpg_toolkit.model.fit import Checkpoint, GenerationStats
from qpg_toolkit.store.artifacts import MANIFEST_NAME, ArtifactStore, atomic_write_text
from qpg_toolkit.store.checkpoints import CheckpointStore


def _checkpoint(generation: int) -> Checkpoint:
    return Checkpoint(
        generation=generation,
        seed=1,
        boundaries_mm=[0.0, 10.0, 20.0],
        population=[[0.0, 1.0], [2.0, 3.0]],
        mse=[0.5, 0.25],
        trace=[GenerationStats(generation=0, best_mse=0.25, median_mse=0.375, evaluations=4)],
        evaluations=4,
    )


def test_atomic_write_leaves_no_temp_files(tmp_path: Path) -> None:
    target = tmp_path / "nested" / "a.txt"
    atomic_write_text(target, "x\n")
    atomic_write_text(target, "y\n")
    assert target.read_text() == "y\n"
    assert [p.name for p in target.parent.iterdir()] == ["a.txt"]


def test_manifest_lists_outputs_and_digests(tmp_path: Path) -> None:
    source = tmp_path / "input.csv"
    source.write_text("1,2\n")
    store = ArtifactStore(tmp_path / "run", "simulate-pm")
    store.record_config({"b": 1, "a": 2})
    store.record_input(source)
    store.record_seed(9)
    store.write_json("summary.json", {"z": 1})
    manifest = store.finalize()

    doc = json.loads((tmp_path / "run" / MANIFEST_NAME).read_text())
    assert doc["outputs"] == ["config.json", "summary.json"]
    assert doc["seed"] == 9
    assert doc["tool_version"] == __version__
    assert doc["input_digests"][str(source)] == hashlib.sha256(b"1,2\n").hexdigest()
    assert manifest.wall_time_s is not None and manifest.wall_time_s >= 0
    echo = (tmp_path / "run" / "config.json").read_text()
    assert echo.index('"a"') < echo.index('"b"')


def test_finalize_checks_declared_outputs(tmp_path: Path) -> None:
    store = ArtifactStore(tmp_path, "bench")
    store.write_text("a.csv", "x\n")
    (tmp_path / "a.csv").unlink()
    with pytest.raises(FileNotFoundError):
        store.finalize()


def test_checkpoint_store_round_trip(tmp_path: Path) -> None:
    store = CheckpointStore(tmp_path)
    assert store.load_latest() is None
    store.save(_checkpoint(0))
    path = store.save(_checkpoint(1))
    assert path.name == "gen_0001.json"
    assert store.load(0).generation == 0
    latest = store.load_latest()
    assert latest == _checkpoint(1)
