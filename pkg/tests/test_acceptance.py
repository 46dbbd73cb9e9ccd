"""Acceptance gate. Every check is exact; each prints one PASS/FAIL line.

Run on its own with ``pytest tests/test_acceptance.py -s``.
"""

import random
import time

import pytest

from indtree.formats import emit_graph6, parse_graph6
from indtree.graph import Graph, branching_points, is_path
from indtree.oracle import SHAPES, TreeGenSpec, all_labeled_trees, enumerate_ind_sets, random_tree
from indtree.polynomial import (
    eval_at,
    graph_ind_poly,
    iter_path_polys,
    path_value_at_minus1,
    tree_ind_poly,
)
from indtree.reduction import MoveKind, ReductionStall, classify, iter_reduction, pure_branches_at

from .conftest import PAPER_EXAMPLE_EDGES

PATH_TABLE = {0: 1, 5: 1, 1: 0, 4: 0, 2: -1, 3: -1}


@pytest.fixture
def report(capsys):
    def _report(label: str, ok: bool, detail: str = "") -> None:
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {label}{': ' + detail if detail else ''}")
        assert ok, f"{label}: {detail}"
    return _report


def seeded_trees(count: int, max_n: int, seed: int):
    master = random.Random(seed)
    for i in range(count):
        yield random_tree(TreeGenSpec(master.randint(1, max_n), master.getrandbits(64), SHAPES[i % 3]))


def dp_value(g: Graph) -> int:
    return eval_at(tree_ind_poly(g), -1)


def check_termination(g: Graph, trace) -> bool:
    return len(trace.moves) <= len(g) and trace.terminal is not None and is_path(trace.terminal)


def test_criterion_1_path_table(report):
    start = time.perf_counter()
    bad = []
    polys = iter_path_polys()
    next(polys)
    for n, p in zip(range(1, 3001), polys):
        v = path_value_at_minus1(n)
        if v != eval_at(p, -1) or v != PATH_TABLE[n % 6]:
            bad.append(n)
    elapsed = time.perf_counter() - start
    report("criterion 1 (path table, n=1..3000, <10 s)", not bad and elapsed < 10,
           f"{len(bad)} mismatches, {elapsed:.2f} s")


def test_criterion_2_paper_example(report):
    g = Graph(edges=PAPER_EXAMPLE_EDGES)
    c = classify(g)
    enum = eval_at(enumerate_ind_sets(g), -1)
    ok = (c.value == 1 and c.trace.terminal_path_n == 6 and c.trace.odd_move_count == 2
          and enum == 1)
    report("criterion 2 (13-vertex example)", ok,
           f"value={c.value}, terminal P_{c.trace.terminal_path_n}, "
           f"odd moves={c.trace.odd_move_count}, enumeration={enum}")


@pytest.mark.slow
def test_criterion_3_exhaustive_small_trees(report):
    start = time.perf_counter()
    total = 0
    failures = []
    termination_failures = 0
    for n in range(1, 9):
        for g in all_labeled_trees(n):
            total += 1
            c = classify(g)
            expected = eval_at(enumerate_ind_sets(g), -1)
            theorem = c.contractible == (c.value == 0) == (c.trace.terminal_path_n % 3 == 1)
            if c.value != expected or not theorem:
                failures.append((n, g.edges()))
            if not check_termination(g, c.trace):
                termination_failures += 1
    elapsed = time.perf_counter() - start
    report("criterion 3 (all labeled trees n<=8)", not failures and termination_failures == 0,
           f"{total} trees, {len(failures)} mismatches, {elapsed:.1f} s")


@pytest.mark.slow
def test_criterion_4_per_move_value_conservation(report):
    moves = 0
    mixed_checked = 0
    failures = []
    for g in seeded_trees(10_000, 60, seed=4):
        steps = list(iter_reduction(g))
        graphs = [g] + [after for _, _, after in steps]
        for before, m, after in steps:
            moves += 1
            vb, va = dp_value(before), dp_value(after)
            if m.kind is MoveKind.MIXED_PAIR:
                if vb != 0:
                    failures.append(("mixed", before.edges()))
            elif vb != (-1 if m.is_odd else 1) * va:
                failures.append((m.kind.value, before.edges()))
        for h in graphs:
            for u in branching_points(h):
                types = {b.type for b in pure_branches_at(h, u)}
                if 1 in types and 2 in types:
                    mixed_checked += 1
                    if dp_value(h) != 0:
                        failures.append(("eligible", h.edges()))
                    break
    report("criterion 4 (per-move conservation, 10,000 trees n<=60)", not failures,
           f"{moves} moves, {mixed_checked} MixedPair-eligible graphs, {len(failures)} failures")


@pytest.mark.slow
def test_criterion_5_order_invariance(report):
    failures = 0
    for i, g in enumerate(seeded_trees(1_000, 60, seed=5)):
        values = {classify(g).value}
        for k in range(5):
            values.add(classify(g, random.Random(i * 10 + k)).value)
        if len(values) != 1:
            failures += 1
    report("criterion 5 (order invariance, 1,000 trees x 5 orders)", failures == 0,
           f"{failures} trees with differing values")


@pytest.mark.slow
def test_criterion_6_termination(report):
    checked = 0
    failures = 0
    stalls = 0

    def run(g, rng=None):
        nonlocal checked, failures, stalls
        checked += 1
        try:
            c = classify(g, rng)
        except ReductionStall:
            stalls += 1
            return
        if not check_termination(g, c.trace):
            failures += 1

    for n in range(1, 9):
        for g in all_labeled_trees(n):
            run(g)
    for g in seeded_trees(10_000, 60, seed=4):
        run(g)
    for i, g in enumerate(seeded_trees(1_000, 60, seed=5)):
        for k in range(5):
            run(g, random.Random(i * 10 + k))
    report("criterion 6 (termination, <=|V| moves, terminal path)", failures == 0 and stalls == 0,
           f"{checked} reductions, {failures} failures, {stalls} stalls")


def test_criterion_7_method_equivalence(report):
    failures = 0
    for g in seeded_trees(2_000, 20, seed=7):
        if not tree_ind_poly(g) == graph_ind_poly(g) == enumerate_ind_sets(g):
            failures += 1
    report("criterion 7 (tree DP = general recursion = enumeration, 2,000 trees n<=20)",
           failures == 0, f"{failures} mismatches")


def test_criterion_8_graph6_round_trip(report):
    failures = 0
    for g in seeded_trees(1_000, 62, seed=8):
        if parse_graph6(emit_graph6(g)) != g.relabeled():
            failures += 1
    report("criterion 8 (graph6 round trip, 1,000 trees n<=62)", failures == 0,
           f"{failures} mismatches")
