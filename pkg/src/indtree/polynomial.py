"""Exact independence polynomials.

Coefficients are Python ints, so counts never overflow and the sign of
I(G; -1) is always exact.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Iterator

from .graph import Graph, GraphError, is_tree


class Polynomial:
    """Integer polynomial stored as a coefficient tuple, lowest degree first.

    Trailing zeros are stripped, so the zero polynomial has no coefficients.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def one(cls) -> Polynomial:
        return cls((1,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (tuple, list)):
            return self.coeffs == Polynomial(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: Polynomial) -> Polynomial:
        return poly_add(self, other)

    def __mul__(self, other: Polynomial) -> Polynomial:
        return poly_mul(self, other)

    def __call__(self, t: int) -> int:
        return eval_at(self, t)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return render_text(self)


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    if len(a.coeffs) < len(b.coeffs):
        a, b = b, a
    out = list(a.coeffs)
    for i, c in enumerate(b.coeffs):
        out[i] += c
    return Polynomial(out)


def poly_shift_mul_x(a: Polynomial) -> Polynomial:
    if not a.coeffs:
        return a
    return Polynomial((0,) + a.coeffs)


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    if not a.coeffs or not b.coeffs:
        return Polynomial()
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, ca in enumerate(a.coeffs):
        if ca:
            for j, cb in enumerate(b.coeffs):
                out[i + j] += ca * cb
    return Polynomial(out)


def eval_at(a: Polynomial, t: int) -> int:
    acc = 0
    for c in reversed(a.coeffs):
        acc = acc * t + c
    return acc


def render_text(a: Polynomial) -> str:
    """``s_0 + s_1*x + s_2*x^2 + ...`` with exact decimal coefficients."""
    if not a.coeffs:
        return "0"
    terms = []
    for i, c in enumerate(a.coeffs):
        if i == 0:
            terms.append(str(c))
        elif i == 1:
            terms.append(f"{c}*x")
        else:
            terms.append(f"{c}*x^{i}")
    return " + ".join(terms)


def to_json_list(a: Polynomial) -> list[str]:
    return [str(c) for c in a.coeffs]


def from_json_list(items: Iterable[str]) -> Polynomial:
    return Polynomial(int(s) for s in items)


def render_json(a: Polynomial) -> str:
    return json.dumps(to_json_list(a))


def _binomial_row(k: int) -> Polynomial:
    row = [1]
    for i in range(k):
        row.append(row[-1] * (k - i) // (i + 1))
    return Polynomial(row)


def iter_path_polys() -> Iterator[Polynomial]:
    """Yield I(P_0), I(P_1), I(P_2), ... using I(P_n) = I(P_{n-1}) + x I(P_{n-2})."""
    prev2, prev1 = [1], [1, 1]
    yield Polynomial(prev2)
    yield Polynomial(prev1)
    while True:
        nxt = prev1 + [0] * (len(prev2) + 1 - len(prev1))
        for i, c in enumerate(prev2):
            nxt[i + 1] += c
        prev2, prev1 = prev1, nxt
        yield Polynomial(nxt)


def path_poly(n: int) -> Polynomial:
    if n < 0:
        raise ValueError("path length must be nonnegative")
    for i, p in enumerate(iter_path_polys()):
        if i == n:
            return p
    raise AssertionError("unreachable")


_PATH_TABLE = (1, 0, -1, -1, 0, 1)


def path_value_at_minus1(n: int) -> int:
    """I(P_n; -1), read off from ``n mod 6``."""
    if n < 0:
        raise ValueError("path length must be nonnegative")
    return _PATH_TABLE[n % 6]


def path_values_by_recurrence(n: int) -> list[int]:
    """I(P_0; -1) .. I(P_n; -1) via a_k = a_{k-1} - a_{k-2}; cross-check for the table."""
    vals = [1, 0]
    while len(vals) <= n:
        vals.append(vals[-1] - vals[-2])
    return vals[: n + 1]


def tree_ind_poly(g: Graph) -> Polynomial:
    """Independence polynomial of a tree by a rooted dynamic program.

    Each vertex carries the pair (sets avoiding it, sets containing it) for
    its subtree; a parent multiplies in the child pairs bottom-up.
    """
    if not is_tree(g):
        raise GraphError("tree_ind_poly requires a tree")
    root = g.vertices[0]
    parent = {root: None}
    order = [root]
    stack = [root]
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if w not in parent:
                parent[w] = u
                order.append(w)
                stack.append(w)
    excl: dict[int, Polynomial] = {}
    incl: dict[int, Polynomial] = {}
    one = Polynomial.one()
    for u in reversed(order):
        out_u = one
        in_u = one
        for w in g.neighbors(u):
            if w == parent[u]:
                continue
            out_u = poly_mul(out_u, poly_add(excl[w], incl[w]))
            in_u = poly_mul(in_u, excl[w])
        excl[u] = out_u
        incl[u] = poly_shift_mul_x(in_u)
    return poly_add(excl[root], incl[root])


def graph_ind_poly(g: Graph) -> Polynomial:
    """Independence polynomial of an arbitrary simple graph (exponential worst case).

    Components are multiplied together; inside a component the vertex of
    largest degree (smallest label on ties) is split on:
    I(G) = I(G - v) + x I(G - N[v]).
    """
    result = Polynomial.one()
    isolated = 0
    for comp in g.components():
        if len(comp) == 1:
            isolated += 1
            continue
        result = poly_mul(result, _component_poly(g.induced_subgraph(comp)))
    if isolated:
        result = poly_mul(result, _binomial_row(isolated))
    return result


def _component_poly(h: Graph) -> Polynomial:
    if h.num_edges() == 0:
        return _binomial_row(len(h))
    pivot = max(h.vertices, key=lambda v: (h.degree(v), -v))
    without = graph_ind_poly(h.remove_vertices([pivot]))
    closed = graph_ind_poly(h.remove_vertices(h.closed_neighborhood(pivot)))
    return poly_add(without, poly_shift_mul_x(closed))


def ind_poly(g: Graph) -> Polynomial:
    """Tree DP when ``g`` is a tree, general recursion otherwise."""
    return tree_ind_poly(g) if is_tree(g) else graph_ind_poly(g)
