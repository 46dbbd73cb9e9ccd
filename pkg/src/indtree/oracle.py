"""Brute-force ground truth, tree generators and the equivalence fuzzer.

All randomness comes from :class:`random.Random` (Mersenne Twister MT19937)
seeded with an explicit integer, so every generated tree and fuzz report is
reproducible from its seed.
"""

from __future__ import annotations

import heapq
import itertools
import json
import random
from collections.abc import Callable, Iterator
from dataclasses import asdict, dataclass, field

from .formats import emit_edge_list
from .graph import Graph, GraphError, path_graph
from .polynomial import Polynomial, eval_at, tree_ind_poly
from .reduction import classify

ENUMERATION_BUDGET = 30
SHAPES = ("uniform_prufer", "spider", "caterpillar")


class BudgetExceeded(GraphError):
    pass


def enumerate_ind_sets(g: Graph, budget: int = ENUMERATION_BUDGET) -> Polynomial:
    """Count independent sets by size, visiting each set exactly once."""
    n = len(g)
    if n > budget:
        raise BudgetExceeded(f"{n} vertices exceeds the enumeration budget of {budget}")
    index = {v: i for i, v in enumerate(g.vertices)}
    # blocked[i]: bit i itself plus all neighbors
    blocked = [0] * n
    for v, i in index.items():
        mask = 1 << i
        for w in g.neighbors(v):
            mask |= 1 << index[w]
        blocked[i] = mask
    counts = [0] * (n + 1)

    def extend(candidates: int, size: int) -> None:
        counts[size] += 1
        while candidates:
            low = candidates & -candidates
            i = low.bit_length() - 1
            # later candidates only, so each set is generated in increasing index order
            candidates ^= low
            extend(candidates & ~blocked[i], size + 1)

    extend((1 << n) - 1, 0)
    return Polynomial(counts)


def prufer_decode(seq: list[int] | tuple[int, ...], n: int) -> Graph:
    """The labeled tree on ``0..n-1`` whose Prüfer sequence is ``seq``."""
    if n <= 2:
        return path_graph(n)
    if len(seq) != n - 2:
        raise ValueError(f"Prüfer sequence for n={n} must have length {n - 2}")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    heap = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(heap)
    edges = []
    for x in seq:
        leaf = heapq.heappop(heap)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(heap, x)
    u, v = heapq.heappop(heap), heapq.heappop(heap)
    edges.append((u, v))
    return Graph(range(n), edges)


@dataclass(frozen=True)
class TreeGenSpec:
    n: int
    seed: int = 0
    shape: str = "uniform_prufer"

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("tree size must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.shape not in SHAPES:
            raise ValueError(f"unknown shape {self.shape!r}; expected one of {SHAPES}")


def random_tree(spec: TreeGenSpec) -> Graph:
    n = spec.n
    if n <= 2:
        return path_graph(n)
    rng = random.Random(spec.seed)
    if spec.shape == "uniform_prufer":
        return prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)
    if spec.shape == "spider":
        edges = _spider_edges(n, rng)
    else:
        edges = _caterpillar_edges(n, rng)
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph(range(n), [(perm[u], perm[v]) for u, v in edges])


def _spider_edges(n: int, rng: random.Random) -> list[tuple[int, int]]:
    legs = rng.randint(min(3, n - 1), max(min(3, n - 1), min(n - 1, 8)))
    cuts = sorted(rng.sample(range(1, n - 1), legs - 1))
    lengths = [b - a for a, b in zip([0] + cuts, cuts + [n - 1])]
    edges = []
    nxt = 1
    for length in lengths:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
    return edges


def _caterpillar_edges(n: int, rng: random.Random) -> list[tuple[int, int]]:
    spine = rng.randint(1, max(1, n // 2))
    edges = [(i, i + 1) for i in range(spine - 1)]
    nxt = spine
    while nxt < n:
        length = min(rng.randint(1, 3), n - nxt)
        prev = rng.randrange(spine)
        for _ in range(length):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
    return edges


def all_labeled_trees(n: int) -> Iterator[Graph]:
    """Every labeled tree on ``0..n-1`` (n**(n-2) of them), via exhaustive Prüfer sequences."""
    if not 1 <= n <= 8:
        raise ValueError("all_labeled_trees supports 1 <= n <= 8")
    if n <= 2:
        yield path_graph(n)
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


@dataclass
class Counterexample:
    index: int
    shape: str
    n: int
    tree_seed: int
    edge_list: str
    classify_value: int | None
    dp_value: int
    enumeration_value: int | None
    error: str | None = None


@dataclass
class FuzzReport:
    seed: int
    count: int
    max_n: int
    shapes: tuple[str, ...]
    checked: int = 0
    passed: int = 0
    enumeration_checked: int = 0
    shape_counts: dict[str, int] = field(default_factory=dict)
    counterexample: Counterexample | None = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["shapes"] = list(self.shapes)
        d["ok"] = self.ok
        return d

    def render_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def render_text(self) -> str:
        lines = [
            f"seed: {self.seed}",
            f"shapes: {', '.join(self.shapes)}",
            f"max_n: {self.max_n}",
            f"checked: {self.checked}/{self.count}",
            f"enumeration oracle checks: {self.enumeration_checked}",
        ]
        lines += [f"shape {s}: {c}" for s, c in self.shape_counts.items()]
        cx = self.counterexample
        if cx is None:
            lines.append(f"result: pass, {self.passed}/{self.count}")
        else:
            lines.append(f"result: FAIL at tree #{cx.index} (shape {cx.shape}, n={cx.n}, seed {cx.tree_seed})")
            if cx.error:
                lines.append(f"error: {cx.error}")
            lines.append(f"classify value: {cx.classify_value}")
            lines.append(f"tree DP value: {cx.dp_value}")
            if cx.enumeration_value is not None:
                lines.append(f"enumeration value: {cx.enumeration_value}")
            lines.append("edge list:")
            lines.append(cx.edge_list.rstrip("\n"))
        return "\n".join(lines)


def fuzz_equivalence(
    count: int,
    max_n: int,
    seed: int = 0,
    shapes: tuple[str, ...] = SHAPES,
    classifier: Callable[[Graph], int] | None = None,
) -> FuzzReport:
    """Compare the reduction classifier against exact evaluation on random trees.

    Tree ``i`` uses shape ``shapes[i % len(shapes)]``; its size and seed are
    drawn from a master generator seeded with ``seed``. The enumeration
    oracle joins in when ``max_n`` is within its budget. Stops at the first
    disagreement.
    """
    if classifier is None:
        def classifier(g):
            return classify(g).value
    report = FuzzReport(seed=seed, count=count, max_n=max_n, shapes=tuple(shapes))
    master = random.Random(seed)
    use_enumeration = max_n <= ENUMERATION_BUDGET
    for i in range(count):
        n = master.randint(1, max_n)
        tree_seed = master.getrandbits(64)
        shape = shapes[i % len(shapes)]
        g = random_tree(TreeGenSpec(n, tree_seed, shape))
        report.checked += 1
        report.shape_counts[shape] = report.shape_counts.get(shape, 0) + 1
        dp_value = eval_at(tree_ind_poly(g), -1)
        enum_value = None
        if use_enumeration:
            enum_value = eval_at(enumerate_ind_sets(g), -1)
            report.enumeration_checked += 1
        got, error = None, None
        try:
            got = classifier(g)
        except Exception as exc:  # reported, not raised
            error = f"{type(exc).__name__}: {exc}"
        good = (
            error is None
            and got == dp_value
            and (enum_value is None or enum_value == dp_value)
            and dp_value in (-1, 0, 1)
        )
        if not good:
            report.counterexample = Counterexample(
                i, shape, n, tree_seed, emit_edge_list(g), got, dp_value, enum_value, error
            )
            return report
        report.passed += 1
    return report
