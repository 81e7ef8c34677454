"""
Artifact files on disk: writing a run directory and reading it back.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Mapping, Optional, Union

from pydantic import ValidationError as PydanticValidationError

from ..coloring.types import Coloring, SuperClassPartition
from ..core.edgelist import read_edge_list
from ..core.errors import GraphFormatError
from ..core.graph import Graph
from ..core.models import Placement
from ..scheduling.ledger import MemoryLedger
from ..scheduling.types import Schedule

logger = logging.getLogger(__name__)


def write_artifacts(directory: Union[Path, str], files: Mapping[str, str]) -> list[Path]:
    """Write each named file under directory, creating it if needed."""
    root = Path(directory)
    root.mkdir(parents=True, exist_ok=True)
    written = []
    for name in sorted(files):
        path = root / name
        path.write_text(files[name], encoding="utf-8")
        written.append(path)
    logger.debug(f"wrote {len(written)} file(s) to {root}")
    return written


@dataclass
class RunArtifacts:
    """Everything a run directory holds, parsed. Absent files are None."""
    graph: Graph
    summary: dict[str, Any]
    placement: Optional[Placement] = None
    loads_csv: Optional[str] = None
    coloring: Optional[Coloring] = None
    partition: Optional[SuperClassPartition] = None
    schedule: Optional[Schedule] = None
    ledger: Optional[MemoryLedger] = None


def _read(root: Path, name: str) -> Optional[str]:
    path = root / name
    return path.read_text(encoding="utf-8") if path.exists() else None


def _summary_int(summary: dict[str, Any], key: str, default: int) -> int:
    value = summary.get(key, default)
    if isinstance(value, bool) or not isinstance(value, int):
        raise GraphFormatError(f"summary.json: {key} must be an integer, got {value!r}")
    return value


def load_artifacts(
    directory: Union[Path, str],
    graph_path: Optional[Union[Path, str]] = None,
) -> RunArtifacts:
    """
    Parse a run directory.

    Raises:
        OSError: graph or summary file missing
        GraphFormatError: a file does not parse
    """
    root = Path(directory)
    graph = read_edge_list(graph_path if graph_path is not None else root / "graph.edges")
    try:
        summary = json.loads((root / "summary.json").read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise GraphFormatError(f"summary.json: {e}") from None
    if not isinstance(summary, dict):
        raise GraphFormatError("summary.json: expected a JSON object")
    artifacts = RunArtifacts(graph=graph, summary=summary)

    text = _read(root, "placement.json")
    if text is not None:
        try:
            artifacts.placement = Placement.model_validate_json(text)
        except PydanticValidationError as e:
            raise GraphFormatError(f"placement.json: {e.error_count()} error(s): {e.errors()[0]['msg']}") from None

    artifacts.loads_csv = _read(root, "loads.csv")

    text = _read(root, "coloring.csv")
    if text is not None:
        artifacts.coloring = Coloring.from_csv(
            text,
            color_count=_summary_int(summary, "colorCount", 0),
            hop_radius=_summary_int(summary, "coloringHopRadius", 1),
            rounds_used=_summary_int(summary, "coloringRounds", 0),
        )

    text = _read(root, "partition.csv")
    if text is not None:
        artifacts.partition = SuperClassPartition.from_csv(text, class_count=_summary_int(summary, "R", 0))

    text = _read(root, "schedule.json")
    if text is not None:
        artifacts.schedule = Schedule.from_json(text)

    text = _read(root, "ledger.csv")
    if text is not None:
        memory = artifacts.schedule.memory if artifacts.schedule is not None else Fraction(1)
        artifacts.ledger = MemoryLedger.from_csv(text, memory=memory)
    return artifacts
