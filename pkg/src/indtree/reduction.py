"""Pure branches, truncation moves and the tree classifier.

A pure branch at a branching point ``u`` is a path from ``u`` to a leaf whose
vertices other than ``u`` all have degree at most two. Its type is its length
(in edges) modulo 3. Three moves shrink a graph at a branching point:

* ``MixedPair``: a type-1 and a type-2 branch coexist; keep only those two
  branches and ``u``. I(G; -1) is then 0.
* ``SameTypeCollapse``: two or more branches of type 1 (or 2); keep one.
* ``TypeZeroRemoval``: delete every type-0 branch, keeping ``u``.

The last two multiply I(G; -1) by -1 exactly when the move is odd, so a
tree's value follows from the number of odd moves and the final path.
"""

from __future__ import annotations

import json
import random
from collections.abc import Iterator
from dataclasses import dataclass, field
from enum import Enum

from .graph import Graph, GraphError, branching_points, is_path, is_tree
from .polynomial import eval_at, graph_ind_poly, path_value_at_minus1


class NotATreeError(GraphError):
    pass


class MoveError(GraphError):
    """A move does not match the pure branches of the graph it is applied to."""


class ReductionStall(RuntimeError):
    """A graph has branching points but no move applies anywhere."""


class MoveKind(str, Enum):
    MIXED_PAIR = "MixedPair"
    SAME_TYPE_COLLAPSE = "SameTypeCollapse"
    TYPE_ZERO_REMOVAL = "TypeZeroRemoval"


class Parity(str, Enum):
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class Branch:
    anchor: int
    path: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.path)

    @property
    def type(self) -> int:
        return len(self.path) % 3

    @property
    def leaf(self) -> int:
        return self.path[-1]

    def sort_key(self) -> tuple[int, int]:
        return (len(self.path), self.path[-1])

    def to_dict(self) -> dict:
        return {"anchor": self.anchor, "path": list(self.path),
                "length": self.length, "type": self.type}


@dataclass(frozen=True)
class Move:
    kind: MoveKind
    anchor: int
    removed: tuple[Branch, ...]
    kept: tuple[Branch, ...]
    parity: Parity

    @property
    def is_odd(self) -> bool:
        return self.parity is Parity.ODD

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "anchor": self.anchor,
            "removed": [b.to_dict() for b in self.removed],
            "kept": [b.to_dict() for b in self.kept],
            "parity": self.parity.value,
        }


@dataclass(frozen=True)
class ReductionTrace:
    moves: tuple[Move, ...]
    terminal_path_n: int
    odd_move_count: int
    mixed_pair_used: bool
    terminal: Graph | None = field(default=None, compare=False, repr=False)

    @property
    def value(self) -> int:
        """I(G; -1) implied by the odd-move count and the terminal path."""
        sign = -1 if self.odd_move_count % 2 else 1
        return sign * path_value_at_minus1(self.terminal_path_n)

    def to_dict(self) -> dict:
        return {
            "moves": [m.to_dict() for m in self.moves],
            "terminal_path_n": self.terminal_path_n,
            "odd_move_count": self.odd_move_count,
            "mixed_pair_used": self.mixed_pair_used,
        }


@dataclass(frozen=True)
class Classification:
    value: int
    contractible: bool
    sphere_euler_parity: Parity | None
    trace: ReductionTrace

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "contractible": self.contractible,
            "sphere_euler_parity": None if self.sphere_euler_parity is None
            else self.sphere_euler_parity.value,
            "trace": self.trace.to_dict(),
        }


def _walk(g: Graph, u: int, first: int) -> Branch | None:
    path = [first]
    prev, cur = u, first
    while g.degree(cur) == 2:
        a, b = g.neighbors(cur)
        nxt = b if a == prev else a
        if nxt == u:
            return None  # closes a cycle back to the anchor
        path.append(nxt)
        prev, cur = cur, nxt
    if g.degree(cur) == 1:
        return Branch(u, tuple(path))
    return None


def pure_branches_at(g: Graph, u: int) -> list[Branch]:
    """All pure branches at branching point ``u``, sorted by (length, leaf label)."""
    if u not in g or g.degree(u) <= 2:
        raise GraphError(f"vertex {u} is not a branching point")
    found = (_walk(g, u, w) for w in g.neighbors(u))
    return sorted((b for b in found if b is not None), key=Branch.sort_key)


def move_parity(m: Move) -> Parity:
    return _parity(m.kind, m.removed, m.kept)


def _parity(kind: MoveKind, removed, kept) -> Parity:
    if kind is MoveKind.MIXED_PAIR:
        return Parity.EVEN
    if kind is MoveKind.TYPE_ZERO_REMOVAL:
        flips = sum(1 for b in removed if b.length % 6 == 3)
    else:
        btype = (kept[0] if kept else removed[0]).type
        hit = 4 if btype == 1 else 2
        flips = sum(1 for b in removed if b.length % 6 == hit)
    return Parity.ODD if flips % 2 else Parity.EVEN


def make_move(kind: MoveKind, anchor: int, removed, kept) -> Move:
    removed, kept = tuple(removed), tuple(kept)
    return Move(kind, anchor, removed, kept, _parity(kind, removed, kept))


def _moves_by_policy(anchor: int, branches: list[Branch]) -> Move | None:
    """The deterministic move at one anchor: type-0 removal, then mixed pair, then collapse."""
    by_type: dict[int, list[Branch]] = {0: [], 1: [], 2: []}
    for b in branches:
        by_type[b.type].append(b)
    if by_type[0]:
        return make_move(MoveKind.TYPE_ZERO_REMOVAL, anchor, by_type[0], ())
    if by_type[1] and by_type[2]:
        kept = (by_type[1][0], by_type[2][0])
        rest = [b for b in branches if b not in kept]
        return make_move(MoveKind.MIXED_PAIR, anchor, rest, kept)
    for t in (1, 2):
        if len(by_type[t]) >= 2:
            return make_move(MoveKind.SAME_TYPE_COLLAPSE, anchor, by_type[t][1:], by_type[t][:1])
    return None


def _all_moves_at(anchor: int, branches: list[Branch], rng: random.Random) -> list[Move]:
    """Every move kind available at ``anchor``, with randomly chosen kept branches."""
    by_type: dict[int, list[Branch]] = {0: [], 1: [], 2: []}
    for b in branches:
        by_type[b.type].append(b)
    options = []
    if by_type[0]:
        options.append(make_move(MoveKind.TYPE_ZERO_REMOVAL, anchor, by_type[0], ()))
    if by_type[1] and by_type[2]:
        kept = (rng.choice(by_type[1]), rng.choice(by_type[2]))
        rest = [b for b in branches if b not in kept]
        options.append(make_move(MoveKind.MIXED_PAIR, anchor, rest, kept))
    for t in (1, 2):
        if len(by_type[t]) >= 2:
            keep = rng.choice(by_type[t])
            rest = [b for b in by_type[t] if b != keep]
            options.append(make_move(MoveKind.SAME_TYPE_COLLAPSE, anchor, rest, (keep,)))
    return options


def choose_moves(g: Graph) -> list[Move]:
    """One policy move per branching point that admits one, in ascending anchor order.

    Raises :class:`ReductionStall` if branching points exist but none admits a move.
    """
    anchors = branching_points(g)
    moves = []
    for u in anchors:
        m = _moves_by_policy(u, pure_branches_at(g, u))
        if m is not None:
            moves.append(m)
    if anchors and not moves:
        raise ReductionStall(f"no move applies at branching points {anchors}")
    return moves


def choose_move(g: Graph) -> Move | None:
    """The policy move at the smallest branching point admitting one; None for paths."""
    moves = choose_moves(g)
    return moves[0] if moves else None


def check_move(g: Graph, m: Move) -> None:
    """Raise :class:`MoveError` unless ``m`` is a valid move of ``g`` right now."""
    if m.anchor not in g or g.degree(m.anchor) <= 2:
        raise MoveError(f"anchor {m.anchor} is not a branching point")
    current = set(pure_branches_at(g, m.anchor))
    for b in m.removed + m.kept:
        if b.anchor != m.anchor:
            raise MoveError(f"branch {b.path} is anchored at {b.anchor}, not {m.anchor}")
        if b not in current:
            raise MoveError(f"branch {list(b.path)} is not a pure branch at {m.anchor}")
    if m.kind is MoveKind.MIXED_PAIR:
        if len(m.kept) != 2 or sorted(b.type for b in m.kept) != [1, 2]:
            raise MoveError("MixedPair must keep one type-1 and one type-2 branch")
    elif m.kind is MoveKind.SAME_TYPE_COLLAPSE:
        if len(m.kept) != 1 or not m.removed:
            raise MoveError("SameTypeCollapse keeps one branch and removes at least one")
        t = m.kept[0].type
        if t == 0:
            raise MoveError("SameTypeCollapse applies to type 1 or type 2 branches")
        same = {b for b in current if b.type == t}
        if same != set(m.removed) | set(m.kept):
            raise MoveError(f"SameTypeCollapse must cover every type-{t} branch at {m.anchor}")
    else:
        if m.kept or not m.removed or any(b.type != 0 for b in m.removed):
            raise MoveError("TypeZeroRemoval removes type-0 branches only")
        zero = {b for b in current if b.type == 0}
        if zero != set(m.removed):
            raise MoveError(f"TypeZeroRemoval must cover every type-0 branch at {m.anchor}")
    if m.parity is not move_parity(m):
        raise MoveError("recorded parity disagrees with the branch lengths")


def is_applicable(g: Graph, m: Move) -> bool:
    try:
        check_move(g, m)
    except (MoveError, GraphError):
        return False
    return True


def apply_move(g: Graph, m: Move) -> Graph:
    check_move(g, m)
    if m.kind is MoveKind.MIXED_PAIR:
        keep = {m.anchor}
        for b in m.kept:
            keep.update(b.path)
        return g.induced_subgraph(keep)
    drop = [v for b in m.removed for v in b.path]
    return g.remove_vertices(drop)


def iter_reduction(g: Graph, rng: random.Random | None = None) -> Iterator[tuple[Graph, Move, Graph]]:
    """Yield ``(before, move, after)`` for each move until no branching point is left.

    Without ``rng`` the deterministic policy runs in rounds: the policy move
    of every branching point is taken from one snapshot of the graph and the
    moves are applied in ascending anchor order, skipping any that an earlier
    move of the round invalidated. With ``rng`` a single random move (random
    anchor, kind and kept branches) is applied per step.
    """
    cur = g
    if rng is None:
        while True:
            round_moves = choose_moves(cur)
            if not round_moves:
                return
            for m in round_moves:
                if m is round_moves[0] or is_applicable(cur, m):
                    nxt = apply_move(cur, m)
                    yield cur, m, nxt
                    cur = nxt
    else:
        while True:
            anchors = branching_points(cur)
            if not anchors:
                return
            options = []
            for u in anchors:
                options.extend(_all_moves_at(u, pure_branches_at(cur, u), rng))
            if not options:
                raise ReductionStall(f"no move applies at branching points {anchors}")
            m = rng.choice(options)
            nxt = apply_move(cur, m)
            yield cur, m, nxt
            cur = nxt


def reduce_tree(g: Graph, rng: random.Random | None = None) -> ReductionTrace:
    """Reduce a tree to a path, recording every move."""
    if not is_tree(g):
        raise NotATreeError("reduction requires a tree")
    moves = []
    terminal = g
    for _, m, after in iter_reduction(g, rng):
        moves.append(m)
        terminal = after
        if len(moves) > len(g):
            raise ReductionStall("move count exceeded the vertex count")
    if not is_path(terminal):
        raise ReductionStall("reduction ended on a graph that is not a path")
    return ReductionTrace(
        moves=tuple(moves),
        terminal_path_n=len(terminal),
        odd_move_count=sum(m.is_odd for m in moves),
        mixed_pair_used=any(m.kind is MoveKind.MIXED_PAIR for m in moves),
        terminal=terminal,
    )


def classify(g: Graph, rng: random.Random | None = None) -> Classification:
    """Value of I(G; -1) for a tree, with the contractibility verdict.

    A value of +1 means Ind(G) is a sphere of odd dimension, -1 one of even
    dimension (the reduced Euler characteristic of Ind(G) is -I(G; -1)).
    """
    trace = reduce_tree(g, rng)
    value = trace.value
    if value == 0:
        parity = None
    else:
        parity = Parity.ODD if value == 1 else Parity.EVEN
    return Classification(value, value == 0, parity, trace)


def render_trace(trace: ReductionTrace) -> str:
    lines = []
    for i, m in enumerate(trace.moves, start=1):
        removed = ", ".join(str(b.length) for b in m.removed)
        kept = ", ".join(str(b.length) for b in m.kept)
        lines.append(
            f"move {i}: {m.kind.value} at {m.anchor}, removed branches [{removed}], "
            f"kept [{kept}], parity {m.parity.value}"
        )
    lines.append(
        f"terminal path n={trace.terminal_path_n}, odd moves s={trace.odd_move_count}, "
        f"I(G;-1)={trace.value}"
    )
    return "\n".join(lines)


def render_trace_json(trace: ReductionTrace) -> str:
    return json.dumps(trace.to_dict(), indent=2)


def simplify(g: Graph) -> tuple[Graph, int] | None:
    """Shrink any simple graph with the sign-tracking moves.

    Returns ``(h, sign)`` with I(g; -1) = sign * I(h; -1), or None when some
    branching point carries a type-1 and a type-2 pure branch (then
    I(g; -1) = 0). Works on graphs with cycles; ``h`` need not be a path.
    """
    sign = 1
    cur = g
    while True:
        for u in branching_points(cur):
            branches = pure_branches_at(cur, u)
            types = {b.type for b in branches}
            if 1 in types and 2 in types:
                return None
            m = _moves_by_policy(u, branches)
            if m is not None:
                break
        else:
            return cur, sign
        cur = apply_move(cur, m)
        if m.is_odd:
            sign = -sign


def value_at_minus1(g: Graph, simplify_first: bool = True) -> int:
    """Exact I(g; -1) for any simple graph, optionally shrinking it with the moves first."""
    if not simplify_first:
        return eval_at(graph_ind_poly(g), -1)
    reduced = simplify(g)
    if reduced is None:
        return 0
    h, sign = reduced
    return sign * eval_at(graph_ind_poly(h), -1)
