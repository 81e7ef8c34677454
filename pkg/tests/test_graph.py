"""Graph type, edge-list format and derived graphs."""

from __future__ import annotations

import pytest
from hypothesis import given

from backplace.core.analysis import selection_subgraph, square_graph
from backplace.core.edgelist import dump_edge_list, load_edge_list, read_edge_list
from backplace.core.errors import (
    DuplicateEdgeError,
    GraphFormatError,
    ParameterError,
    SelfLoopError,
    UnknownNodeError,
    ValidationError,
)
from backplace.core.generators import generate_complete, generate_cycle, generate_star
from backplace.core.graph import Graph
from backplace.core.models import Placement
from backplace.placement.modulo import place_backups

from strategies import PROPERTY_SETTINGS, graphs


def _symmetric_and_loop_free(graph: Graph) -> bool:
    for v in graph.nodes:
        for u in graph.neighbors(v):
            if u == v or v not in graph.neighbors(u):
                return False
    return True


class TestGraph:
    def test_from_edges_sorts_adjacency(self):
        g = Graph.from_edges([(3, 1), (1, 2)])
        assert g.neighbors(1) == (2, 3)
        assert g.max_degree == 2
        assert g.min_degree == 1
        assert list(g.edges()) == [(1, 2), (1, 3)]

    def test_declared_isolated_node(self):
        g = Graph.from_edges([(1, 2)], nodes=[1, 2, 9])
        assert g.isolated_nodes() == [9]
        assert g.node_count == 3
        assert g.edge_count == 1

    def test_rejects_self_loop(self):
        with pytest.raises(SelfLoopError):
            Graph.from_edges([(1, 1)])

    def test_rejects_duplicate(self):
        with pytest.raises(DuplicateEdgeError):
            Graph.from_edges([(1, 2), (2, 1)])

    def test_rejects_undeclared_endpoint(self):
        with pytest.raises(UnknownNodeError):
            Graph.from_edges([(1, 5)], nodes=[1, 2])

    def test_rejects_non_positive_ids(self):
        with pytest.raises(ParameterError):
            Graph(nodes=frozenset({0}), adjacency={0: ()})

    def test_rejects_asymmetric_adjacency(self):
        with pytest.raises(ParameterError):
            Graph(nodes=frozenset({1, 2}), adjacency={1: (2,), 2: ()})

    def test_equality_ignores_construction_order(self):
        assert Graph.from_edges([(1, 2), (2, 3)]) == Graph.from_edges([(3, 2), (2, 1)])
        assert Graph.from_edges([(1, 2)]) != Graph.from_edges([(1, 2)], nodes=[1, 2, 3])

    def test_distances(self, c6):
        assert c6.distance(1, 4) == 3
        assert c6.bfs_distances(1, limit=2) == {1: 0, 2: 1, 6: 1, 3: 2, 5: 2}
        assert c6.is_connected()
        assert not Graph.from_edges([(1, 2), (3, 4)]).is_connected()

    def test_induced(self, c6):
        sub = c6.induced([1, 2, 3])
        assert list(sub.edges()) == [(1, 2), (2, 3)]

    def test_to_networkx(self, c4):
        nxg = c4.to_networkx()
        assert sorted(nxg.nodes) == [1, 2, 3, 4]
        assert nxg.number_of_edges() == 4

    @PROPERTY_SETTINGS
    @given(graph=graphs())
    def test_invariants_hold_for_random_graphs(self, graph):
        assert _symmetric_and_loop_free(graph)
        assert sum(graph.degree(v) for v in graph.nodes) == 2 * graph.edge_count


class TestEdgeList:
    def test_path(self):
        g = load_edge_list(b"1 2\n2 3\n")
        assert g == Graph.from_edges([(1, 2), (2, 3)])

    def test_self_loop_has_line_number(self):
        with pytest.raises(SelfLoopError) as exc:
            load_edge_list(b"1 2\n1 1\n")
        assert exc.value.line == 2

    def test_duplicate_edge(self):
        with pytest.raises(DuplicateEdgeError) as exc:
            load_edge_list(b"1 2\n1 2\n")
        assert exc.value.line == 2

    def test_reversed_duplicate(self):
        with pytest.raises(DuplicateEdgeError):
            load_edge_list("1 2\n2 1\n")

    def test_comments_and_blank_lines(self):
        g = load_edge_list("# header\n\n1 2\n  # indented comment\n2 3\n")
        assert g.edge_count == 2

    @pytest.mark.parametrize("text", ["1 x\n", "1 2 3\n", "-1 2\n", "0 1\n", "1 ²\n"])
    def test_malformed_lines(self, text):
        with pytest.raises(GraphFormatError) as exc:
            load_edge_list(text)
        assert exc.value.line == 1

    def test_unknown_node_against_declared_set(self):
        with pytest.raises(UnknownNodeError):
            load_edge_list("1 2\n2 7\n", nodes=[1, 2, 3])

    def test_not_utf8(self):
        with pytest.raises(GraphFormatError):
            load_edge_list(b"\xff\xfe1 2\n")

    def test_dump_keeps_isolated_nodes(self, tmp_path):
        g = Graph.from_edges([(1, 2), (5, 2)], nodes=[1, 2, 5, 8])
        path = tmp_path / "g.edges"
        path.write_text(dump_edge_list(g), encoding="utf-8")
        assert read_edge_list(path) == g

    def test_dump_header(self, c4):
        assert dump_edge_list(c4).splitlines()[0] == "# n=4 m=4"


class TestSquareGraph:
    def test_c6_degree_four(self, c6):
        sq = square_graph(c6)
        assert all(sq.degree(v) == 4 for v in sq.nodes)
        assert not sq.has_edge(1, 4)

    def test_triangle_unchanged(self, triangle):
        assert square_graph(triangle) == triangle

    def test_star_becomes_complete(self, star5):
        assert square_graph(star5) == generate_complete(6)

    @PROPERTY_SETTINGS
    @given(graph=graphs())
    def test_contains_original_and_respects_degree_bound(self, graph):
        sq = square_graph(graph)
        for u, v in graph.edges():
            assert sq.has_edge(u, v)
        delta = graph.max_degree
        assert sq.max_degree <= delta * delta + delta
        for u, v in sq.edges():
            assert graph.distance(u, v) in (1, 2)


class TestSelectionSubgraph:
    def test_c4_selection_is_c4(self, c4):
        assert selection_subgraph(c4, place_backups(c4, 1)) == c4

    def test_star_selection_is_star(self, star3):
        assert selection_subgraph(star3, place_backups(star3, 1)) == star3

    def test_rejects_non_edge_choice(self, c4):
        bad = Placement(k=1, choices={1: (3,), 2: (3,), 3: (4,), 4: (1,)})
        with pytest.raises(ValidationError):
            selection_subgraph(c4, bad)

    def test_rejects_missing_choices(self, c4):
        with pytest.raises(ValidationError):
            selection_subgraph(c4, Placement(k=1, choices={}))

    def test_cycle_k2_selects_every_edge(self):
        g = generate_cycle(5)
        assert selection_subgraph(g, place_backups(g, 2)) == g

    def test_star_leaf_ids(self):
        g = generate_star(4)
        assert g.neighbors(1) == (2, 3, 4, 5)
