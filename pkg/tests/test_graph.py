import pytest
from hypothesis import given

from indtree.graph import (
    Graph,
    GraphError,
    VertexKind,
    classify_vertices,
    cycle_graph,
    is_path,
    is_tree,
    path_graph,
    remove_vertices,
    star_graph,
)

from .conftest import graphs, trees


def test_constructor_rejects_self_loop_and_duplicates():
    with pytest.raises(GraphError):
        Graph(edges=[(0, 0)])
    with pytest.raises(GraphError):
        Graph(edges=[(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph(vertices=[-1])


def test_labels_are_preserved():
    g = Graph(edges=[(10, 3), (3, 7)])
    assert g.vertices == (3, 7, 10)
    assert g.neighbors(3) == {7, 10}


def test_is_tree():
    assert is_tree(path_graph(5))
    assert is_tree(Graph([4]))
    assert not is_tree(Graph())
    assert not is_tree(cycle_graph(3))
    assert not is_tree(Graph(edges=[(0, 1), (2, 3)]))


def test_remove_vertices_examples():
    p3 = path_graph(3)
    h = remove_vertices(p3, {1})
    assert h.vertices == (0, 2) and h.num_edges() == 0
    assert remove_vertices(p3, set()) == p3
    star = star_graph(3)
    assert len(remove_vertices(star, star.closed_neighborhood(0))) == 0
    assert len(p3) == 3  # untouched
    with pytest.raises(GraphError):
        remove_vertices(p3, {9})


def test_classify_vertices():
    kinds = classify_vertices(path_graph(4))
    assert sorted(kinds.values()) == sorted([VertexKind.LEAF] * 2 + [VertexKind.INTERNAL] * 2)
    kinds = classify_vertices(star_graph(3))
    assert kinds[0] is VertexKind.BRANCHING
    assert [kinds[i] for i in (1, 2, 3)] == [VertexKind.LEAF] * 3
    assert classify_vertices(Graph([0])) == {0: VertexKind.INTERNAL}


def test_single_vertex_is_a_path():
    assert is_path(Graph([0]))
    assert not is_path(star_graph(3))


@given(graphs())
def test_adjacency_symmetric(g):
    for u in g:
        for v in g.neighbors(u):
            assert u in g.neighbors(v)


@given(graphs(max_n=9), graphs(max_n=9))
def test_remove_vertices_is_induced(g, other):
    drop = set(other.vertices) & set(g.vertices)
    h = g.remove_vertices(drop)
    assert len(h) == len(g) - len(drop)
    for u in g:
        for v in g:
            if u < v:
                expected = g.has_edge(u, v) and u not in drop and v not in drop
                assert h.has_edge(u, v) == expected


@given(trees(max_n=30))
def test_tree_degree_facts(g):
    n = len(g)
    assert sum(g.degree(v) for v in g) == 2 * (n - 1)
    if n >= 2:
        assert sum(1 for v in g if g.degree(v) == 1) >= 2
