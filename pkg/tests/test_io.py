"""Formats: graph6 (bit-exact), edge lists, DOT, names, JSON objects."""

import random

import networkx as nx
import pytest

import bei
from bei.io import graph_from_json, graph_to_json, is_graph_name


def test_graph6_known_values():
    # single edge on two vertices, and the 4-cycle, in standard encoding
    assert bei.to_graph6(bei.complete_graph(2)) == "A_"
    assert bei.to_graph6(bei.Graph(2)) == "A?"
    assert bei.to_graph6(bei.complete_graph(4)) == "C~"
    assert bei.from_graph6("C~") == bei.complete_graph(4)


def test_graph6_header_and_whitespace():
    g = bei.path_graph(4)
    s = bei.to_graph6(g, header=True)
    assert s.startswith(">>graph6<<")
    assert bei.from_graph6(s) == g
    assert bei.from_graph6(bei.to_graph6(g) + "\n") == g


def test_graph6_roundtrip_random_and_bit_exact_vs_networkx():
    rng = random.Random(20259)
    for _ in range(250):
        n = rng.randrange(0, 13)
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        edges = [e for e in pairs if rng.random() < 0.4]
        g = bei.Graph(n, edges)
        nxg = nx.Graph()
        nxg.add_nodes_from(range(n))
        nxg.add_edges_from(edges)
        mine = bei.to_graph6(g)
        assert mine == nx.to_graph6_bytes(nxg, header=False).decode().strip()
        assert bei.from_graph6(mine) == g


def test_graph6_three_byte_vertex_count():
    g = bei.Graph(63, [(0, 62), (10, 20)])
    nxg = nx.Graph()
    nxg.add_nodes_from(range(63))
    nxg.add_edges_from(g.edges())
    s = bei.to_graph6(g)
    assert s == nx.to_graph6_bytes(nxg, header=False).decode().strip()
    assert bei.from_graph6(s) == g


def test_graph6_rejects_malformed():
    with pytest.raises(ValueError):
        bei.from_graph6("")
    with pytest.raises(ValueError):
        bei.from_graph6("C~!")  # '!' is below the value range
    with pytest.raises(ValueError):
        bei.from_graph6("C")  # truncated body
    with pytest.raises(ValueError):
        bei.from_graph6("C~~")  # excess body
    # nonzero padding bits: K2 is 'A_' (0b10 padded); 'A' + chr(63+0b011111)
    with pytest.raises(ValueError):
        bei.from_graph6("A" + chr(63 + 0b011111))


def test_edge_list_integer_mode():
    g = bei.parse_edge_list("0 1\n1 2\n\n# comment\n2 3  # trailing\n")
    assert g == bei.path_graph(4)
    assert g.labels is None
    assert bei.parse_edge_list(bei.format_edge_list(g)) == g


def test_edge_list_symbolic_mode():
    text = "u v\nv w\nw x\n"
    g = bei.parse_edge_list(text)
    assert g.n == 4 and g.m == 3
    assert g.labels == ("u", "v", "w", "x")
    assert bei.format_edge_list(g) == text


def test_edge_list_rejects_malformed():
    with pytest.raises(ValueError):
        bei.parse_edge_list("a b c\n")
    with pytest.raises(ValueError):
        bei.parse_edge_list("a a\n")
    with pytest.raises(ValueError):
        bei.parse_edge_list("-1 0\n")


def test_dot_export():
    g = bei.Graph(2, [(0, 1)], labels=["left", "right"])
    dot = bei.to_dot(g)
    assert 'label="left"' in dot and "0 -- 1;" in dot
    plain = bei.to_dot(bei.path_graph(2))
    assert "0;" in plain and "0 -- 1;" in plain


def test_named_graphs():
    assert bei.graph_from_name("K4") == bei.complete_graph(4)
    assert bei.graph_from_name("p3") == bei.path_graph(3)
    assert bei.graph_from_name("C5") == bei.cycle_graph(5)
    assert is_graph_name("K12") and not is_graph_name("Q3") and not is_graph_name("K")
    with pytest.raises(ValueError):
        bei.graph_from_name("Q3")
    with pytest.raises(ValueError):
        bei.graph_from_name("C2")


def test_graph_json_roundtrip():
    g = bei.Graph(3, [(0, 2)], labels=["a", "b", "c"])
    obj = graph_to_json(g)
    back = graph_from_json(obj)
    assert back == g and back.labels == g.labels
