"""Shared graph fixtures."""

from __future__ import annotations

import pytest

from backplace.coloring.types import Coloring
from backplace.core.generators import (
    generate_complete,
    generate_cycle,
    generate_path,
    generate_star,
)
from backplace.core.graph import Graph

# Croix pattée: a center joined to four triangles. Colors 0..3 are red,
# yellow, green and blue; the center is blue.
RED, YELLOW, GREEN, BLUE = 0, 1, 2, 3
_CROIX_TRIANGLES = [(1, 2, 9), (1, 4, 3), (1, 6, 5), (1, 7, 8)]
_CROIX_COLORS = {
    1: BLUE,
    2: GREEN, 3: GREEN, 6: GREEN,
    4: YELLOW, 5: YELLOW, 8: YELLOW,
    7: RED, 9: RED,
}


@pytest.fixture
def triangle() -> Graph:
    return generate_cycle(3)


@pytest.fixture
def c4() -> Graph:
    return generate_cycle(4)


@pytest.fixture
def c6() -> Graph:
    return generate_cycle(6)


@pytest.fixture
def star3() -> Graph:
    return generate_star(3)


@pytest.fixture
def star5() -> Graph:
    return generate_star(5)


@pytest.fixture
def k4() -> Graph:
    return generate_complete(4)


@pytest.fixture
def path3() -> Graph:
    return generate_path(3)


@pytest.fixture
def croix() -> Graph:
    edges = set()
    for a, b, c in _CROIX_TRIANGLES:
        edges.update({(a, b), (a, c), (b, c)})
    return Graph.from_edges(sorted(edges))


@pytest.fixture
def croix_coloring() -> Coloring:
    return Coloring(colors=dict(_CROIX_COLORS), color_count=4)


@pytest.fixture
def six_node_fixture() -> Graph:
    """
    Synthetic K=3 instance on nodes 1..6: the hexagon plus the chords needed
    for min degree 3 (the three long diagonals).
    """
    hexagon = [(i, i % 6 + 1) for i in range(1, 7)]
    diagonals = [(1, 4), (2, 5), (3, 6)]
    return Graph.from_edges(hexagon + diagonals)
