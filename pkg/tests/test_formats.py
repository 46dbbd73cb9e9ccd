import networkx as nx
import pytest
from hypothesis import given

from indtree.formats import (
    ParseError,
    detect_format,
    emit_edge_list,
    emit_graph6,
    parse_edge_list,
    parse_graph,
    parse_graph6,
)
from indtree.graph import Graph, path_graph, star_graph
from indtree.oracle import TreeGenSpec, random_tree

from .conftest import graphs, trees


def _nx_decode(s: str) -> set:
    """Independent graph6 decoder."""
    return set(map(tuple, map(sorted, nx.from_graph6_bytes(s.encode()).edges())))


def test_edge_list_examples():
    assert parse_edge_list("0 1\n1 2") == path_graph(3)
    star = parse_edge_list("0 1\n0 2\n0 3")
    assert star.degree(0) == 3


@pytest.mark.parametrize("text, lineno", [
    ("0 0", 1),
    ("0 1\n# c\n1 0", 3),
    ("0 1\n1 x", 2),
    ("0 1 2", 1),
    ("-1 2", 1),
])
def test_edge_list_errors_report_line(text, lineno):
    with pytest.raises(ParseError, match=f"line {lineno}"):
        parse_edge_list(text)


def test_edge_list_comments_and_isolated_vertices():
    g = parse_edge_list("# header\n\n5 6\nv 9\n  # indented comment\n")
    assert g.vertices == (5, 6, 9)
    assert g.num_edges() == 1
    assert parse_edge_list(emit_edge_list(g)) == g


def test_graph6_small_cases():
    # "B_" sets only the bit for pair (0,1); P_3 is "Bg"
    g = parse_graph6("B_")
    assert g.vertices == (0, 1, 2) and g.edges() == [(0, 1)]
    assert _nx_decode("B_") == set(g.edges())
    assert parse_graph6("Bg") == path_graph(3)
    assert emit_graph6(path_graph(3)) == "Bg"
    assert parse_graph6("@") == Graph([0])
    assert emit_graph6(Graph([0])) == "@"
    assert parse_graph6("A_").edges() == [(0, 1)]
    assert parse_graph6(">>graph6<<A_").edges() == [(0, 1)]


@pytest.mark.parametrize("bad", ["B ", "Bg\x7f", "B", "Bgg", ">>sparse6<<A_", "", "~?"])
def test_graph6_errors(bad):
    with pytest.raises(ParseError):
        parse_graph6(bad)


def test_graph6_long_header_matches_networkx():
    g = random_tree(TreeGenSpec(100, 5))
    s = emit_graph6(g)
    assert s.startswith("~")
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges())
    assert s == nx.to_graph6_bytes(h, header=False).decode().strip()
    assert parse_graph6(s) == g


def test_emit_relabels_in_ascending_order():
    g = Graph(edges=[(10, 30), (30, 20)])
    assert parse_graph6(emit_graph6(g)) == Graph(edges=[(0, 2), (2, 1)])


@given(graphs(max_n=12))
def test_graph6_agrees_with_networkx(g):
    s = emit_graph6(g)
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges())
    assert s == nx.to_graph6_bytes(h, header=False).decode().strip()
    assert parse_graph6(s) == g


@given(trees(max_n=62))
def test_graph6_round_trip(g):
    assert parse_graph6(emit_graph6(g)) == g.relabeled()


def test_detect_format():
    assert detect_format("0 1\n") == "edgelist"
    assert detect_format("# c\nv 3\n") == "edgelist"
    assert detect_format("Bg\n") == "graph6"
    assert parse_graph("@") == Graph([0])
    assert parse_graph("0 1", "edgelist") == path_graph(2)
    assert parse_graph("Cs") == star_graph(3)
