import networkx as nx
import pytest

from conftest import random_graph
from iocodes import Graph, ParseError
from iocodes.formats import (
    emit_edge_list,
    emit_graph6,
    load_graph,
    parse_edge_list,
    parse_graph6,
)


class TestEdgeList:
    def test_round_trip(self, rng):
        for _ in range(30):
            g = random_graph(rng.randint(0, 10), rng.random(), rng)
            assert parse_edge_list(emit_edge_list(g)) == g

    def test_comments_and_implied_order(self):
        g = parse_edge_list("# triangle\n0 1\n1 2   # closing\n0 2\n")
        assert g.n == 3 and g.edge_count == 3

    def test_header_allows_isolates(self):
        g = parse_edge_list("n 4\n0 1\n")
        assert g.n == 4 and g.edge_count == 1

    def test_error_carries_line(self):
        with pytest.raises(ParseError) as err:
            parse_edge_list("0 1\nnonsense line here\n")
        assert err.value.line == 2

    def test_self_loop_rejected(self):
        with pytest.raises(ParseError):
            parse_edge_list("2 2\n")


class TestGraph6:
    def test_known_strings(self):
        k4 = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        assert emit_graph6(k4) == "C~"
        p2 = Graph(2, [(0, 1)])
        assert emit_graph6(p2) == "A_"
        empty5 = Graph(5)
        assert emit_graph6(empty5) == "D??"

    def test_round_trip(self, rng):
        for _ in range(60):
            g = random_graph(rng.randint(0, 20), rng.random(), rng)
            assert parse_graph6(emit_graph6(g)) == g

    def test_matches_networkx(self, rng):
        for _ in range(60):
            g = random_graph(rng.randint(1, 15), rng.random(), rng)
            h = nx.Graph()
            h.add_nodes_from(range(g.n))
            h.add_edges_from(g.edges())
            theirs = nx.to_graph6_bytes(h, header=False).decode().strip()
            assert emit_graph6(g) == theirs
            back = nx.from_graph6_bytes(emit_graph6(g).encode())
            assert sorted(map(tuple, map(sorted, back.edges()))) == g.edges()

    def test_header_accepted(self):
        g = parse_graph6(">>graph6<<C~")
        assert g.edge_count == 6

    def test_long_form_order(self):
        g = Graph(70, [(0, 69)])
        assert parse_graph6(emit_graph6(g)) == g

    def test_bad_length(self):
        with pytest.raises(ParseError):
            parse_graph6("C~~")

    def test_bad_padding(self):
        # D is n=5 -> 10 bits -> 2 bytes; set a padding bit
        with pytest.raises(ParseError):
            parse_graph6("D?@")


class TestLoadGraph:
    def test_dispatch(self):
        assert load_graph("0 1\n1 2\n").n == 3
        assert load_graph("C~").n == 4
        assert load_graph(">>graph6<<C~").n == 4

    def test_empty_input(self):
        with pytest.raises(ParseError):
            load_graph("   ")
