"""
Edge-list and layout file formats.

Edge list (UTF-8):
    # comment lines are ignored
    1 2
    2 3
    7          <- a lone ID declares an isolated node

Layout CSV:
    id,x,y
    1,0.25,0.75
"""

from __future__ import annotations

import csv
import io
from pathlib import Path
from typing import Iterable, Optional, Union

from .errors import DuplicateEdgeError, GraphFormatError, SelfLoopError, UnknownNodeError
from .generators import GeometricLayout
from .graph import Graph, NodeId


def _parse_id(token: str, line: int) -> NodeId:
    if not (token.isascii() and token.isdigit()):
        raise GraphFormatError(f"expected a positive decimal integer, got {token!r}", line)
    value = int(token)
    if value < 1:
        raise GraphFormatError(f"node IDs must be positive, got {value}", line)
    return value


def load_edge_list(
    text: Union[bytes, str],
    nodes: Optional[Iterable[NodeId]] = None,
) -> Graph:
    """
    Parse the edge-list format.

    Args:
        text: File content (bytes are decoded as UTF-8)
        nodes: Optional declared node set; edges outside it are rejected

    Raises:
        GraphFormatError: malformed line (with line number)
        SelfLoopError, DuplicateEdgeError: with line number
        UnknownNodeError: edge endpoint outside the declared node set
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise GraphFormatError(f"not UTF-8: {e}") from None

    declared = set(nodes) if nodes is not None else None
    node_set: set[NodeId] = set(declared or ())
    seen: set[tuple[NodeId, NodeId]] = set()
    edges: list[tuple[NodeId, NodeId]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) > 2:
            raise GraphFormatError(f"expected 'u v' or a single node ID, got {line!r}", lineno)
        ids = [_parse_id(tok, lineno) for tok in tokens]
        for v in ids:
            if declared is not None and v not in declared:
                raise UnknownNodeError(v, context=f"declared node set (line {lineno})")
            node_set.add(v)
        if len(ids) == 1:
            continue
        u, v = ids
        if u == v:
            raise SelfLoopError(u, lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(u, v, lineno)
        seen.add(key)
        edges.append(key)

    return Graph.from_edges(edges, nodes=node_set)


def read_edge_list(path: Union[Path, str]) -> Graph:
    """Load an edge-list file."""
    return load_edge_list(Path(path).read_bytes())


def dump_edge_list(graph: Graph) -> str:
    """Serialize graph; isolated nodes are written as lone IDs."""
    lines = [f"# n={graph.node_count} m={graph.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    lines.extend(str(v) for v in graph.isolated_nodes())
    return "\n".join(lines) + "\n"


def dump_layout_csv(layout: GeometricLayout) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["id", "x", "y"])
    for v in sorted(layout.positions):
        x, y = layout.positions[v]
        writer.writerow([v, repr(x), repr(y)])
    return buffer.getvalue()


def load_layout_csv(text: str, radius: float) -> GeometricLayout:
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames != ["id", "x", "y"]:
        raise GraphFormatError(f"layout header must be id,x,y, got {reader.fieldnames}", 1)
    positions: dict[NodeId, tuple[float, float]] = {}
    for lineno, row in enumerate(reader, start=2):
        try:
            positions[_parse_id(row["id"], lineno)] = (float(row["x"]), float(row["y"]))
        except ValueError as e:
            raise GraphFormatError(str(e), lineno) from None
    return GeometricLayout(positions=positions, radius=radius)
