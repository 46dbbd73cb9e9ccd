from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import strategies as st

from indtree.graph import Graph
from indtree.oracle import prufer_decode

PAPER_EXAMPLE_EDGES = [
    (1, 8), (1, 2), (2, 3), (2, 4), (1, 5), (5, 6), (5, 7),
    (8, 9), (9, 10), (9, 11), (8, 12), (12, 13),
]


@pytest.fixture
def paper_tree() -> Graph:
    return Graph(edges=PAPER_EXAMPLE_EDGES)


def subset_counts(g: Graph) -> list[int]:
    """Independent-set counts by plain subset enumeration (no pruning, no recursion)."""
    vs = g.vertices
    counts = [0] * (len(vs) + 1)
    for k in range(len(vs) + 1):
        for s in combinations(vs, k):
            if all(not g.has_edge(a, b) for a, b in combinations(s, 2)):
                counts[k] += 1
    while counts and counts[-1] == 0:
        counts.pop()
    return counts


def alternating_sum(coeffs) -> int:
    return sum(c if i % 2 == 0 else -c for i, c in enumerate(coeffs))


@st.composite
def trees(draw, min_n: int = 1, max_n: int = 14) -> Graph:
    n = draw(st.integers(min_n, max_n))
    if n <= 2:
        return prufer_decode([], n)
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return prufer_decode(seq, n)


@st.composite
def graphs(draw, max_n: int = 10) -> Graph:
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(range(n), chosen)
