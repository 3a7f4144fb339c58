"""Profile files and MSE-trace CSV."""

from __future__ import annotations

import json
from collections.abc import Sequence
from pathlib import Path

from pydantic import ValidationError

from qpg_toolkit.errors import ParseError
from qpg_toolkit.model.fit import GenerationStats
from qpg_toolkit.model.process import DeltaBetaProfile


def read_profile(path: str | Path) -> DeltaBetaProfile:
    """Load a bare profile JSON, or the best profile of a fit result JSON."""
    source = str(path)
    try:
        raw = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(source, exc.lineno, exc.msg) from exc
    if isinstance(raw, dict) and "best_profile" in raw:
        raw = raw["best_profile"]
    try:
        return DeltaBetaProfile.model_validate(raw)
    except ValidationError as exc:
        raise ParseError(source, 1, f"not a Δβ profile: {exc.errors()[0]['msg']}") from exc


def format_trace_csv(trace: Sequence[GenerationStats]) -> str:
    lines = ["generation,best_mse,median_mse,evaluations"]
    for s in trace:
        lines.append(f"{s.generation},{s.best_mse:.17g},{s.median_mse:.17g},{s.evaluations}")
    return "\n".join(lines) + "\n"
