"""
Topology generators.

Random instances draw from numpy's PCG64 bit generator
(``numpy.random.default_rng(seed)``), which is portable: the same seed gives
the same stream on every platform, so the same seed gives the same graph.
Nodes are numbered 1..n in draw order.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .errors import ParameterError
from .graph import Graph, NodeId

logger = logging.getLogger(__name__)

DEFAULT_MIN_DEGREE_FRACTION = 0.5
DEFAULT_MAX_ATTEMPTS = 1000


@dataclass(frozen=True)
class GeometricLayout:
    """Node positions in the unit square plus the connection radius."""
    positions: Mapping[NodeId, tuple[float, float]]
    radius: float


def _check_radius(radius: float) -> None:
    if not (0 < radius <= math.sqrt(2)):
        raise ParameterError(f"radius must be in (0, sqrt(2)], got {radius}")


def udg_from_positions(
    positions: Mapping[NodeId, tuple[float, float]],
    radius: float,
) -> tuple[Graph, GeometricLayout]:
    """
    Unit disk graph over explicit positions.

    Edge {u, v} iff the Euclidean distance is at most radius. Squared
    distances are compared so the rule is exact for points on the boundary.
    """
    _check_radius(radius)
    ids = sorted(positions)
    coords = np.array([positions[v] for v in ids], dtype=np.float64).reshape(len(ids), 2)
    diff = coords[:, None, :] - coords[None, :, :]
    sq = diff[..., 0] * diff[..., 0] + diff[..., 1] * diff[..., 1]
    close = sq <= radius * radius
    rows, cols = np.nonzero(np.triu(close, k=1))
    edges = [(ids[i], ids[j]) for i, j in zip(rows.tolist(), cols.tolist())]
    layout = GeometricLayout(
        positions={v: (float(x), float(y)) for v, (x, y) in zip(ids, coords.tolist())},
        radius=radius,
    )
    return Graph.from_edges(edges, nodes=ids), layout


def generate_udg(n: int, radius: float, seed: int) -> tuple[Graph, GeometricLayout]:
    """
    Random unit disk graph: n points uniform i.i.d. in the unit square.

    Args:
        n: Number of nodes (>= 1)
        radius: Connection radius in (0, sqrt(2)]
        seed: PCG64 seed

    Returns:
        (graph, layout)
    """
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    _check_radius(radius)
    rng = np.random.default_rng(seed)
    points = rng.random((n, 2))
    positions = {i + 1: (float(x), float(y)) for i, (x, y) in enumerate(points.tolist())}
    return udg_from_positions(positions, radius)


def generate_bounded_growth(
    n: int,
    radius: float,
    seed: int,
    min_degree_fraction: float = DEFAULT_MIN_DEGREE_FRACTION,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
) -> tuple[Graph, GeometricLayout]:
    """
    UDG accepted only when min degree >= min_degree_fraction * max degree.

    Attempt i draws with seed + i. The first accepted draw is returned.
    """
    if not (0 < min_degree_fraction <= 1):
        raise ParameterError(f"min_degree_fraction must be in (0, 1], got {min_degree_fraction}")
    if max_attempts < 1:
        raise ParameterError(f"max_attempts must be >= 1, got {max_attempts}")
    for attempt in range(max_attempts):
        graph, layout = generate_udg(n, radius, seed + attempt)
        if graph.max_degree > 0 and graph.min_degree >= min_degree_fraction * graph.max_degree:
            logger.debug(f"bounded-growth draw accepted at attempt {attempt} (seed {seed + attempt})")
            return graph, layout
    raise ParameterError(
        f"no draw with min degree >= {min_degree_fraction} * max degree "
        f"in {max_attempts} attempts (n={n}, radius={radius}, seed={seed})"
    )


def generate_cycle(n: int) -> Graph:
    """C_n on nodes 1..n."""
    if n < 3:
        raise ParameterError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges([(i, i % n + 1) for i in range(1, n + 1)])


def generate_star(leaves: int) -> Graph:
    """Center 1 joined to leaves 2..leaves+1."""
    if leaves < 1:
        raise ParameterError(f"star needs leaves >= 1, got {leaves}")
    return Graph.from_edges([(1, leaf) for leaf in range(2, leaves + 2)])


def generate_path(n: int) -> Graph:
    """Path 1-2-...-n."""
    if n < 2:
        raise ParameterError(f"path needs n >= 2, got {n}")
    return Graph.from_edges([(i, i + 1) for i in range(1, n)])


def generate_complete(n: int) -> Graph:
    """K_n on nodes 1..n."""
    if n < 2:
        raise ParameterError(f"complete graph needs n >= 2, got {n}")
    return Graph.from_edges([(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])
