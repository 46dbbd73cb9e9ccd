"""Immutable labeled simple graphs and the structural queries used by the reduction."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from enum import Enum


class GraphError(ValueError):
    """Raised for malformed graph data or invalid graph operations."""


class VertexKind(str, Enum):
    LEAF = "leaf"
    INTERNAL = "internal"
    BRANCHING = "branching"


class Graph:
    """Undirected simple graph on nonnegative integer labels.

    Labels are kept as given (never compacted). Instances are immutable; every
    operation that changes structure returns a new graph.
    """

    __slots__ = ("_adj", "_vertices", "_hash")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        adj: dict[int, set[int]] = {}
        for v in vertices:
            _check_label(v)
            adj.setdefault(v, set())
        for u, v in edges:
            _check_label(u)
            _check_label(v)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            nu = adj.setdefault(u, set())
            if v in nu:
                raise GraphError(f"duplicate edge {min(u, v)}-{max(u, v)}")
            nu.add(v)
            adj.setdefault(v, set()).add(u)
        self._set_adjacency({v: frozenset(ns) for v, ns in adj.items()})

    @classmethod
    def _from_adjacency(cls, adj: Mapping[int, frozenset[int]]) -> Graph:
        g = cls.__new__(cls)
        g._set_adjacency(adj)
        return g

    def _set_adjacency(self, adj: Mapping[int, frozenset[int]]) -> None:
        self._vertices = tuple(sorted(adj))
        self._adj = {v: adj[v] for v in self._vertices}
        self._hash = None

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __iter__(self):
        return iter(self._vertices)

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v}") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.neighbors(v) | {v}

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return [(u, v) for u in self._vertices for v in sorted(self._adj[u]) if u < v]

    def num_edges(self) -> int:
        return sum(len(ns) for ns in self._adj.values()) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def remove_vertices(self, drop: Iterable[int]) -> Graph:
        """Induced subgraph on the vertices not in ``drop``."""
        drop = frozenset(drop)
        unknown = drop - self._adj.keys()
        if unknown:
            raise GraphError(f"unknown vertices {sorted(unknown)}")
        if not drop:
            return self
        return Graph._from_adjacency(
            {v: ns - drop for v, ns in self._adj.items() if v not in drop}
        )

    def induced_subgraph(self, keep: Iterable[int]) -> Graph:
        keep = frozenset(keep)
        return self.remove_vertices(self._adj.keys() - keep)

    def components(self) -> list[tuple[int, ...]]:
        """Connected components, each as a sorted vertex tuple, ordered by smallest label."""
        seen: set[int] = set()
        out = []
        for s in self._vertices:
            if s in seen:
                continue
            seen.add(s)
            stack = [s]
            comp = []
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self._adj[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            out.append(tuple(sorted(comp)))
        return out

    def is_connected(self) -> bool:
        return len(self._vertices) > 0 and len(self.components()) == 1

    def relabeled(self) -> Graph:
        """Copy with labels compacted to ``0..n-1`` in ascending label order."""
        index = {v: i for i, v in enumerate(self._vertices)}
        return Graph._from_adjacency(
            {index[v]: frozenset(index[w] for w in ns) for v, ns in self._adj.items()}
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._adj.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={len(self)}, edges={self.edges()!r})"


def _check_label(v: object) -> None:
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise GraphError(f"vertex labels must be nonnegative integers, got {v!r}")


def path_graph(n: int, start: int = 0) -> Graph:
    """The path ``start - start+1 - ... - start+n-1``."""
    vs = range(start, start + n)
    return Graph(vs, zip(vs, vs[1:]))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    return Graph([0], [(0, i) for i in range(1, leaves + 1)])


def spider_graph(legs: Iterable[int]) -> Graph:
    """A center 0 with one pendant path per entry of ``legs`` (lengths in edges)."""
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph([0], edges)


def cycle_graph(n: int) -> Graph:
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def is_tree(g: Graph) -> bool:
    """Connected with ``|E| = |V| - 1``; the empty graph is not a tree."""
    n = len(g)
    return n > 0 and g.num_edges() == n - 1 and g.is_connected()


def is_path(g: Graph) -> bool:
    """True for a tree with no vertex of degree above two (P_1 included)."""
    return is_tree(g) and all(g.degree(v) <= 2 for v in g)


def classify_vertices(g: Graph) -> dict[int, VertexKind]:
    kinds = {}
    for v in g:
        d = g.degree(v)
        if d == 1:
            kinds[v] = VertexKind.LEAF
        elif d > 2:
            kinds[v] = VertexKind.BRANCHING
        else:
            kinds[v] = VertexKind.INTERNAL
    return kinds


def branching_points(g: Graph) -> list[int]:
    return [v for v in g if g.degree(v) > 2]


def leaves(g: Graph) -> list[int]:
    return [v for v in g if g.degree(v) == 1]


def remove_vertices(g: Graph, drop: Iterable[int]) -> Graph:
    return g.remove_vertices(drop)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """Union of two graphs; ``b`` is shifted past the largest label of ``a``."""
    shift = (max(a.vertices) + 1) if len(a) else 0
    return Graph(
        list(a.vertices) + [v + shift for v in b.vertices],
        a.edges() + [(u + shift, v + shift) for u, v in b.edges()],
    )
