"""Command line front end: ``indtree {classify,poly,reduce,gen,fuzz}``.

Exit codes: 0 success, 1 fuzz counterexample, 2 parse or usage error,
3 input is not a tree, 4 vertex budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import formats
from .graph import GraphError, is_tree
from .oracle import SHAPES, TreeGenSpec, fuzz_equivalence, random_tree
from .polynomial import eval_at, graph_ind_poly, render_text, to_json_list, tree_ind_poly
from .reduction import classify, reduce_tree, render_trace

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_PARSE = 2
EXIT_NOT_TREE = 3
EXIT_BUDGET = 4

DEFAULT_BUDGET = 25


class CliError(Exception):
    def __init__(self, message: str, status: int):
        super().__init__(message)
        self.status = status


def _read_graph(args):
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        return formats.parse_graph(text, args.format)
    except (OSError, UnicodeDecodeError, GraphError) as exc:
        raise CliError(f"cannot read graph: {exc}", EXIT_PARSE) from exc


def _read_tree(args):
    g = _read_graph(args)
    if not is_tree(g):
        raise CliError("input graph is not a tree", EXIT_NOT_TREE)
    return g


def _summary_line(c) -> str:
    if c.contractible:
        kind = "contractible"
    else:
        kind = f"sphere ({c.sphere_euler_parity.value} Euler parity)"
    return (
        f"I(G;-1)={c.value}, {kind}, terminal P_{c.trace.terminal_path_n}, "
        f"odd moves {c.trace.odd_move_count}"
    )


def cmd_classify(args) -> int:
    c = classify(_read_tree(args))
    if args.output == "json":
        d = c.to_dict()
        trace = d.pop("trace")
        d["terminal_path_n"] = trace["terminal_path_n"]
        d["odd_move_count"] = trace["odd_move_count"]
        d["mixed_pair_used"] = trace["mixed_pair_used"]
        if args.trace:
            d["trace"] = trace
        print(json.dumps(d, indent=2))
    else:
        print(_summary_line(c))
        if args.trace:
            print(render_trace(c.trace))
    return EXIT_OK


def cmd_poly(args) -> int:
    g = _read_graph(args)
    if is_tree(g):
        p, method = tree_ind_poly(g), "tree_dp"
    else:
        if len(g) > args.budget:
            raise CliError(
                f"{len(g)} vertices exceeds the budget of {args.budget} for non-tree input",
                EXIT_BUDGET,
            )
        p, method = graph_ind_poly(g), "general"
    value = eval_at(p, -1)
    if args.output == "json":
        print(json.dumps({
            "coefficients": to_json_list(p),
            "value_at_minus1": str(value),
            "method": method,
        }, indent=2))
    else:
        print(f"{render_text(p)}; I(-1)={value}")
    return EXIT_OK


def cmd_reduce(args) -> int:
    trace = reduce_tree(_read_tree(args))
    if args.output == "json":
        d = trace.to_dict()
        d["value"] = trace.value
        print(json.dumps(d, indent=2))
    else:
        print(render_trace(trace))
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        spec = TreeGenSpec(args.n, args.seed, args.shape)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARSE) from exc
    g = random_tree(spec)
    if args.format == "graph6":
        print(formats.emit_graph6(g))
    else:
        sys.stdout.write(formats.emit_edge_list(g))
    return EXIT_OK


def cmd_fuzz(args) -> int:
    report = fuzz_equivalence(args.count, args.max_n, args.seed)
    print(report.render_json() if args.output == "json" else report.render_text())
    return EXIT_OK if report.ok else EXIT_COUNTEREXAMPLE


def _budget(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("budget must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="indtree",
        description="Classify independence complexes of trees by branch truncation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p):
        p.add_argument("input", nargs="?", default="-", help="graph file, or - for stdin")
        p.add_argument("--format", choices=["auto", "edgelist", "graph6"], default="auto")
        p.add_argument("--output", choices=["text", "json"], default="text")

    p = sub.add_parser("classify", help="I(G;-1), contractibility and sphere parity of a tree")
    graph_input(p)
    p.add_argument("--trace", action="store_true", help="append the full move log")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("poly", help="independence polynomial and its value at -1")
    graph_input(p)
    p.add_argument("--budget", type=_budget, default=DEFAULT_BUDGET,
                   help="max vertices for the exponential evaluator (non-trees)")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("reduce", help="reduction trace of a tree")
    graph_input(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gen", help="generate a seeded random tree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--shape", choices=SHAPES, default="uniform_prufer")
    p.add_argument("--format", choices=["auto", "edgelist", "graph6"], default="edgelist")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("fuzz", help="cross-check the classifier against exact evaluation")
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--max-n", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"indtree: {exc}", file=sys.stderr)
        return exc.status


if __name__ == "__main__":
    sys.exit(main())
