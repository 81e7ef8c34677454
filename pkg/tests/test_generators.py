"""Topology generators."""

from __future__ import annotations

import math

import pytest

from backplace.core.edgelist import dump_layout_csv, load_layout_csv
from backplace.core.errors import GraphFormatError, ParameterError
from backplace.core.generators import (
    generate_bounded_growth,
    generate_complete,
    generate_cycle,
    generate_path,
    generate_star,
    generate_udg,
    udg_from_positions,
)

# Edge count of generate_udg(50, 0.3, seed=42) under the PCG64 stream, whose
# first draws are 0.7739560485559633, 0.4388784397520523, 0.8585979199113825.
UDG_50_EDGES = 274


def _scan_edges(positions, radius):
    """Independent O(n²) pairwise scan of the radius rule."""
    ids = sorted(positions)
    edges = []
    for i, u in enumerate(ids):
        for v in ids[i + 1:]:
            dx = positions[u][0] - positions[v][0]
            dy = positions[u][1] - positions[v][1]
            if dx * dx + dy * dy <= radius * radius:
                edges.append((u, v))
    return edges


class TestUnitDisk:
    def test_single_node(self):
        graph, layout = generate_udg(1, 0.5, seed=0)
        assert graph.node_count == 1
        assert graph.edge_count == 0
        assert set(layout.positions) == {1}

    def test_identical_points_are_adjacent(self):
        graph, _ = udg_from_positions({1: (0.5, 0.5), 2: (0.5, 0.5)}, 0.1)
        assert list(graph.edges()) == [(1, 2)]

    def test_boundary_distance_is_an_edge(self):
        graph, _ = udg_from_positions({1: (0.0, 0.0), 2: (0.5, 0.0)}, 0.5)
        assert graph.edge_count == 1

    def test_fixed_seed_is_reproducible(self):
        first, layout = generate_udg(50, 0.3, seed=42)
        second, again = generate_udg(50, 0.3, seed=42)
        assert first == second
        assert layout.positions == again.positions
        assert sorted(first.nodes) == list(range(1, 51))

    def test_first_draws(self):
        _, layout = generate_udg(2, 0.3, seed=42)
        assert layout.positions[1] == (0.7739560485559633, 0.4388784397520523)
        assert layout.positions[2][0] == 0.8585979199113825

    def test_fixed_seed_matches_pairwise_scan(self):
        graph, layout = generate_udg(50, 0.3, seed=42)
        assert list(graph.edges()) == _scan_edges(layout.positions, 0.3)
        assert graph.edge_count == UDG_50_EDGES

    @pytest.mark.parametrize("seed", range(10))
    def test_radius_rule_over_seeds(self, seed):
        graph, layout = generate_udg(40, 0.25, seed=seed)
        assert list(graph.edges()) == _scan_edges(layout.positions, 0.25)
        for x, y in layout.positions.values():
            assert 0.0 <= x < 1.0 and 0.0 <= y < 1.0

    def test_different_seeds_differ(self):
        a, _ = generate_udg(30, 0.3, seed=1)
        b, _ = generate_udg(30, 0.3, seed=2)
        assert a != b

    @pytest.mark.parametrize("radius", [0.0, -0.1, 2.0, math.sqrt(2) + 1e-9])
    def test_invalid_radius(self, radius):
        with pytest.raises(ParameterError):
            generate_udg(10, radius, seed=0)

    def test_max_radius_is_complete(self):
        graph, _ = generate_udg(8, math.sqrt(2), seed=3)
        assert graph == generate_complete(8)

    def test_invalid_n(self):
        with pytest.raises(ParameterError):
            generate_udg(0, 0.3, seed=0)

    def test_layout_csv_round_trip(self):
        _, layout = generate_udg(12, 0.3, seed=7)
        loaded = load_layout_csv(dump_layout_csv(layout), layout.radius)
        assert loaded == layout

    def test_layout_csv_bad_header(self):
        with pytest.raises(GraphFormatError):
            load_layout_csv("node,x,y\n1,0.1,0.2\n", 0.3)


class TestBoundedGrowth:
    def test_accepted_draw_meets_degree_ratio(self):
        graph, _ = generate_bounded_growth(40, 0.85, seed=5, min_degree_fraction=0.5)
        assert graph.min_degree >= 0.5 * graph.max_degree

    def test_deterministic(self):
        a, _ = generate_bounded_growth(40, 0.85, seed=5)
        b, _ = generate_bounded_growth(40, 0.85, seed=5)
        assert a == b

    def test_gives_up_after_max_attempts(self):
        with pytest.raises(ParameterError):
            generate_bounded_growth(60, 0.05, seed=0, min_degree_fraction=1.0, max_attempts=3)

    @pytest.mark.parametrize("fraction", [0.0, 1.5])
    def test_invalid_fraction(self, fraction):
        with pytest.raises(ParameterError):
            generate_bounded_growth(10, 0.5, seed=0, min_degree_fraction=fraction)


class TestSmallFixtures:
    def test_triangle(self):
        g = generate_cycle(3)
        assert g.edge_count == 3

    def test_c6(self):
        g = generate_cycle(6)
        assert all(g.degree(v) == 2 for v in g.nodes)
        assert g.edge_count == 6

    def test_c4(self):
        g = generate_cycle(4)
        assert g.edge_count == 4
        assert all(g.degree(v) == 2 for v in g.nodes)

    def test_cycle_too_small(self):
        with pytest.raises(ParameterError):
            generate_cycle(2)

    def test_star_single_leaf(self):
        assert list(generate_star(1).edges()) == [(1, 2)]

    def test_star_two_leaves_is_path(self):
        g = generate_star(2)
        assert sorted(g.degree(v) for v in g.nodes) == [1, 1, 2]

    def test_star_five(self):
        g = generate_star(5)
        assert (g.max_degree, g.min_degree) == (5, 1)

    def test_star_needs_leaves(self):
        with pytest.raises(ParameterError):
            generate_star(0)

    def test_path_and_complete(self):
        assert list(generate_path(3).edges()) == [(1, 2), (2, 3)]
        assert generate_complete(4).edge_count == 6
