"""Linial, distance-2 and (Δ+1) colorings, super-classes and checkers."""

from __future__ import annotations

import pytest
from hypothesis import given

from backplace.coloring import (
    Coloring,
    SuperClassPartition,
    conflicting_pairs,
    delta_plus_one_coloring,
    distance2_coloring,
    linial_coloring,
    partition_super_classes,
    reduce_to_delta_plus_one,
    verify_coloring,
)
from backplace.coloring.linial import (
    LINIAL_ROUND_SLACK,
    linial_color_bound,
    linial_schedule,
    log_star,
    next_prime,
    reduce_color,
)
from backplace.core.analysis import square_graph
from backplace.core.errors import GraphFormatError, ParameterError, RoundLimitError, ValidationError
from backplace.core.generators import generate_udg
from backplace.core.graph import Graph

from strategies import PROPERTY_SETTINGS, graphs

LARGE_ID_SPACE = 10**4


class TestArithmetic:
    def test_log_star(self):
        assert log_star(2) == 0
        assert log_star(4) == 1
        assert log_star(16) == 2
        assert log_star(65536) == 3

    def test_next_prime(self):
        assert next_prime(0) == 2
        assert next_prime(14) == 17
        assert next_prime(17) == 17

    def test_schedule_shrinks_every_step(self):
        steps = linial_schedule(10**9, 4)
        assert steps
        for step in steps:
            assert step.colors_after < step.colors_before
            assert step.q > 4 * step.d
        assert steps[-1].colors_after <= linial_color_bound(4)

    def test_no_step_when_palette_is_small(self):
        assert linial_schedule(3, 2) == []

    def test_reduce_color_separates_neighbors(self):
        step = linial_schedule(10**6, 3)[0]
        neighbors = [17, 4000, 999_999]
        mine = reduce_color(123_456, neighbors, step)
        assert all(mine != reduce_color(c, [123_456], step) for c in neighbors)

    @pytest.mark.parametrize("args", [(0, 1), (5, -1)])
    def test_schedule_arguments(self, args):
        with pytest.raises(ParameterError):
            linial_schedule(*args)


class TestLinial:
    def test_single_node(self):
        coloring = linial_coloring(Graph.from_edges([], nodes=[1]))
        assert coloring.color_count == 1
        assert coloring.rounds_used == 0
        assert coloring.colors == {1: 0}

    def test_triangle(self, triangle):
        coloring = linial_coloring(triangle)
        assert verify_coloring(triangle, coloring)
        assert coloring.color_count == 3

    def test_c6(self, c6):
        coloring = linial_coloring(c6)
        assert verify_coloring(c6, coloring)
        assert coloring.hop_radius == 1

    def test_large_id_space_is_reduced(self, c6):
        coloring = linial_coloring(c6, id_space=LARGE_ID_SPACE)
        assert verify_coloring(c6, coloring)
        assert coloring.color_count <= linial_color_bound(2)
        assert 1 <= coloring.rounds_used <= log_star(LARGE_ID_SPACE) + LINIAL_ROUND_SLACK

    def test_exact_round_budget(self, c6):
        exact = linial_coloring(c6, id_space=LARGE_ID_SPACE)
        budgeted = linial_coloring(c6, max_rounds=exact.rounds_used, id_space=LARGE_ID_SPACE)
        assert budgeted == exact
        with pytest.raises(RoundLimitError):
            linial_coloring(c6, max_rounds=exact.rounds_used - 1, id_space=LARGE_ID_SPACE)

    def test_id_above_space(self, c6):
        with pytest.raises(ParameterError):
            linial_coloring(c6, id_space=5)

    def test_degree_bound_below_delta(self, star5):
        with pytest.raises(ParameterError):
            linial_coloring(star5, degree_bound=3)

    @PROPERTY_SETTINGS
    @given(graph=graphs(max_nodes=12))
    def test_proper_and_fast(self, graph):
        coloring = linial_coloring(graph, id_space=LARGE_ID_SPACE)
        assert verify_coloring(graph, coloring)
        assert coloring.rounds_used <= log_star(LARGE_ID_SPACE) + LINIAL_ROUND_SLACK
        assert coloring.color_count <= linial_color_bound(graph.max_degree)

    def test_unit_disk_graphs(self):
        for seed in range(20):
            graph, _ = generate_udg(80, 0.2, seed=seed)
            coloring = linial_coloring(graph)
            assert verify_coloring(graph, coloring), f"seed {seed}"
            assert coloring.rounds_used <= log_star(graph.max_id) + LINIAL_ROUND_SLACK


class TestDistanceTwo:
    def test_star3_all_distinct(self, star3):
        coloring = distance2_coloring(star3)
        assert len(set(coloring.colors.values())) == 4
        assert coloring.hop_radius == 2
        assert verify_coloring(star3, coloring)

    def test_c6(self, c6):
        coloring = distance2_coloring(c6, id_space=LARGE_ID_SPACE)
        assert verify_coloring(c6, coloring)
        assert conflicting_pairs(c6, coloring) == []

    def test_single_edge(self):
        graph = Graph.from_edges([(1, 2)])
        coloring = distance2_coloring(graph)
        assert coloring.colors[1] != coloring.colors[2]

    @PROPERTY_SETTINGS
    @given(graph=graphs(max_nodes=9))
    def test_same_as_linial_on_square_graph(self, graph):
        delta = graph.max_degree
        simulated = distance2_coloring(graph, id_space=LARGE_ID_SPACE)
        direct = linial_coloring(
            square_graph(graph), id_space=LARGE_ID_SPACE, degree_bound=delta * delta + delta
        )
        assert simulated.colors == direct.colors
        assert simulated.color_count == direct.color_count
        assert verify_coloring(graph, simulated)

    def test_narrow_bandwidth_inflates_rounds(self, star5):
        steps = len(linial_schedule(LARGE_ID_SPACE, 30))
        assert steps >= 1
        wide = distance2_coloring(star5, id_space=LARGE_ID_SPACE)
        narrow = distance2_coloring(star5, id_space=LARGE_ID_SPACE, bandwidth_factor=6)
        # 12-byte messages relay four 2-byte colors at once; 3-byte messages one at a time
        assert wide.rounds_used == steps * 2
        assert narrow.rounds_used == steps * 5
        assert narrow.colors == wide.colors

    def test_exact_round_budget(self, star5):
        wide = distance2_coloring(star5, id_space=LARGE_ID_SPACE)
        budgeted = distance2_coloring(star5, id_space=LARGE_ID_SPACE, max_rounds=wide.rounds_used)
        assert budgeted.colors == wide.colors
        with pytest.raises(RoundLimitError):
            distance2_coloring(star5, id_space=LARGE_ID_SPACE, max_rounds=wide.rounds_used - 1)


class TestDeltaPlusOne:
    def test_c6(self, c6):
        coloring = delta_plus_one_coloring(c6)
        assert verify_coloring(c6, coloring)
        assert coloring.color_count == 3
        assert coloring.rounds_used == 3

    def test_triangle_is_already_minimal(self, triangle):
        coloring = delta_plus_one_coloring(triangle)
        assert coloring.color_count == 3
        assert coloring.rounds_used == 0

    def test_star5(self, star5):
        coloring = delta_plus_one_coloring(star5)
        assert coloring.color_count <= 6
        assert verify_coloring(star5, coloring)

    def test_rounds_add_up(self, c6):
        start = linial_coloring(c6, id_space=LARGE_ID_SPACE)
        reduced = reduce_to_delta_plus_one(c6, start)
        assert reduced.rounds_used == start.rounds_used + start.color_count - 3

    def test_elimination_fits_its_own_round_count(self, c6):
        start = linial_coloring(c6, id_space=LARGE_ID_SPACE)
        steps = start.color_count - 3
        reduced = reduce_to_delta_plus_one(c6, start, max_rounds=steps)
        assert reduced == reduce_to_delta_plus_one(c6, start)

    def test_rejects_improper_start(self, c6):
        start = Coloring(colors={v: 0 for v in c6.nodes}, color_count=6)
        with pytest.raises(ValidationError):
            reduce_to_delta_plus_one(c6, start)

    @PROPERTY_SETTINGS
    @given(graph=graphs(max_nodes=12))
    def test_proper_with_delta_plus_one_colors(self, graph):
        coloring = delta_plus_one_coloring(graph, id_space=LARGE_ID_SPACE)
        assert verify_coloring(graph, coloring)
        assert coloring.color_count <= graph.max_degree + 1


class TestSuperClasses:
    def test_even_split(self):
        partition = partition_super_classes(4, 2)
        assert partition.class_of == {0: 0, 1: 0, 2: 1, 3: 1}
        assert partition.colors_per_class == 2

    def test_uneven_split(self):
        partition = partition_super_classes(7, 3)
        assert [len(partition.colors_in(s)) for s in range(3)] == [3, 3, 1]

    def test_trailing_class_may_be_empty(self):
        partition = partition_super_classes(5, 4)
        assert partition.colors_in(3) == []

    def test_single_class(self):
        partition = partition_super_classes(6, 1)
        assert set(partition.class_of.values()) == {0}

    @pytest.mark.parametrize("count, r", [(4, 0), (4, 5), (0, 1)])
    def test_out_of_range(self, count, r):
        with pytest.raises(ParameterError):
            partition_super_classes(count, r)

    def test_csv(self):
        partition = partition_super_classes(7, 3)
        loaded = SuperClassPartition.from_csv(partition.to_csv(), 3)
        assert loaded == partition


class TestCheckers:
    def test_partial_coloring(self, c4):
        with pytest.raises(ValidationError):
            verify_coloring(c4, Coloring(colors={1: 0, 2: 1}, color_count=2))

    def test_extra_node(self, c4):
        colors = {1: 0, 2: 1, 3: 0, 4: 1, 9: 0}
        with pytest.raises(ValidationError):
            verify_coloring(c4, Coloring(colors=colors, color_count=2))

    def test_constant_coloring(self, c4):
        assert not verify_coloring(c4, Coloring(colors={v: 0 for v in c4.nodes}, color_count=1))

    def test_color_outside_palette(self, c4):
        coloring = Coloring(colors={1: 0, 2: 1, 3: 0, 4: 2}, color_count=2)
        assert not verify_coloring(c4, coloring)

    def test_distance_two_violation(self, path3):
        colors = {1: 0, 2: 1, 3: 0}
        assert verify_coloring(path3, Coloring(colors=colors, color_count=2))
        two_hop = Coloring(colors=colors, color_count=2, hop_radius=2)
        assert not verify_coloring(path3, two_hop)
        assert conflicting_pairs(path3, two_hop) == [(1, 3)]

    def test_croix_fixture(self, croix, croix_coloring):
        assert verify_coloring(croix, croix_coloring)

    def test_invalid_radius(self):
        with pytest.raises(ParameterError):
            Coloring(colors={}, color_count=1, hop_radius=3)


class TestColoringCsv:
    def test_round_trip(self, c6):
        coloring = delta_plus_one_coloring(c6)
        text = coloring.to_csv()
        assert text.startswith("node,color\n")
        loaded = Coloring.from_csv(text, coloring.color_count, rounds_used=coloring.rounds_used)
        assert loaded == coloring

    def test_node_twice(self):
        with pytest.raises(GraphFormatError) as exc:
            Coloring.from_csv("node,color\n1,0\n1,1\n", 2)
        assert exc.value.line == 3

    @pytest.mark.parametrize("text", ["", "vertex,color\n1,0\n", "node,color\n1,red\n"])
    def test_malformed(self, text):
        with pytest.raises(GraphFormatError):
            Coloring.from_csv(text, 2)
