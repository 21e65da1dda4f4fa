"""Command-line surface: check, sequence, search, cotree, verify, realize.

Output is line-oriented and pipe-friendly; JSON mode emits one object per
line. Exit codes: 0 success, 1 usage error, 2 input parse error,
3 verification found counterexamples.
"""

from __future__ import annotations

import argparse
import json
import sys

from .graph import (
    Graph,
    Graph6Error,
    from_edge_list,
    from_graph6,
    enumerate_connected_nonisomorphic,
    is_connected,
    to_graph6,
)
from .chroma import hue_profile, is_realizable_sequence, realize_sequence
from .cotree import NotACographError, build_cotree, cotree_to_sexpr, procedure_values, uniform_assignment_property
from .families import is_corona_of_complete, thm222_predicate, thm_2k1_witness, thm_3k_witness
from .cotree import is_cograph
from .atlas import (
    ROW_FLAGS,
    THEOREM_IDS,
    report_to_jsonl,
    report_to_tsv,
    search,
    verify_theorem,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_COUNTEREXAMPLES = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _build_parser() -> _Parser:
    p = _Parser(prog="wellhued", description=__doc__)
    sub = p.add_subparsers(dest="verb")

    def add_common(sp, with_input=True):
        if with_input:
            src = sp.add_mutually_exclusive_group()
            src.add_argument("--g6", help="inline graph6 string")
            src.add_argument("--file", help="path to graph6 lines or an edge list")
            src.add_argument("--gen", type=int, help="generate connected graphs up to this order")
        sp.add_argument("--format", choices=("tsv", "json"), default="tsv")
        sp.add_argument("--workers", type=int, default=1)
        sp.add_argument("--max-order", type=int, default=7)

    sp = sub.add_parser("check", help="hue profile plus family-tag verdicts")
    add_common(sp)
    sp = sub.add_parser("sequence", help="the a_k sequence, or why it breaks")
    add_common(sp)
    sp = sub.add_parser("search", help="stream a search report over a universe")
    add_common(sp)
    sp.add_argument("--filter", action="append", default=[], choices=ROW_FLAGS)
    sp = sub.add_parser("cotree", help="cotree, procedure values, UAP verdict")
    add_common(sp)
    sp = sub.add_parser("verify", help="run a theorem verification harness")
    sp.add_argument("theorem", choices=THEOREM_IDS)
    add_common(sp, with_input=False)
    sp = sub.add_parser("realize", help="construct a well-hued graph for a sequence")
    sp.add_argument("terms", type=int, nargs="+")
    add_common(sp, with_input=False)
    return p


def _read_graphs(args) -> list[Graph]:
    sources = [s for s in (args.g6, args.file, args.gen) if s is not None]
    if len(sources) != 1:
        raise UsageError("exactly one of --g6 / --file / --gen is required")
    if args.g6 is not None:
        return [from_graph6(args.g6)]
    if args.gen is not None:
        out = []
        for n in range(1, args.gen + 1):
            out.extend(enumerate_connected_nonisomorphic(n))
        return out
    with open(args.file) as fh:
        text = fh.read()
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ValueError("input file holds no graphs")
    head = lines[0].lstrip()
    if head[0].isdigit() and " " in head:
        return [from_edge_list(text)]
    return [from_graph6(ln.strip()) for ln in lines]


def _single_graph(args) -> Graph:
    graphs = _read_graphs(args)
    if len(graphs) != 1:
        raise UsageError("this verb takes exactly one graph")
    return graphs[0]


def _family_verdicts(g: Graph) -> list[dict]:
    out = []
    m = is_corona_of_complete(g)
    out.append({"predicate": "corona_of_complete", "holds": m is not None, "witness": m})
    out.append({"predicate": "thm222", "holds": thm222_predicate(g), "witness": None})
    holds, c = thm_2k1_witness(g)
    out.append({"predicate": "thm_2k1", "holds": holds, "witness": c})
    tk = {"holds": False, "witness": None}
    for k in range(2, g.order // 3 + 1):
        ok, clique = thm_3k_witness(g, k)
        if ok:
            tk = {"holds": True, "witness": {"k": k, "clique": list(clique)}}
            break
    out.append({"predicate": "thm_3k", **tk})
    out.append({"predicate": "cograph", "holds": is_cograph(g), "witness": None})
    return out


def _cmd_check(args, out) -> int:
    g = _single_graph(args)
    print(json.dumps(hue_profile(g).to_json(), sort_keys=True), file=out)
    for verdict in _family_verdicts(g):
        print(json.dumps(verdict, sort_keys=True), file=out)
    return EXIT_OK


def _cmd_sequence(args, out) -> int:
    g = _single_graph(args)
    p = hue_profile(g)
    if p.sequence is not None:
        print(" ".join(map(str, p.sequence)), file=out)
    else:
        for k in range(1, p.chromatic_number + 1):
            orders = p.maximal_orders[k]
            if len(orders) > 1:
                print(
                    f"not well-hued at k={k}: maximal orders {' '.join(map(str, orders))}",
                    file=out,
                )
    return EXIT_OK


def _cmd_search(args, out) -> int:
    graphs = _read_graphs(args)
    label = args.g6 or args.file or f"connected n <= {args.gen}"
    report = search(graphs, args.filter, universe_label=str(label), workers=args.workers)
    text = report_to_jsonl(report) if args.format == "json" else report_to_tsv(report)
    out.write(text)
    return EXIT_OK


def _annotated_sexpr(node, vals) -> str:
    if node.is_leaf:
        return f"{node.vertex}:{vals[id(node)]}"
    inner = " ".join(_annotated_sexpr(c, vals) for c in node.children)
    return f"({node.label}:{vals[id(node)]} {inner})"


def _cmd_cotree(args, out) -> int:
    g = _single_graph(args)
    t = build_cotree(g)
    v1 = procedure_values(t, 1)
    v2 = procedure_values(t, 2)
    uap = uniform_assignment_property(t)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "cotree": cotree_to_sexpr(t),
                    "procedure_1": _annotated_sexpr(t.root, v1),
                    "procedure_2": _annotated_sexpr(t.root, v2),
                    "uniform_assignment_property": uap,
                },
                sort_keys=True,
            ),
            file=out,
        )
    else:
        print(f"cotree\t{cotree_to_sexpr(t)}", file=out)
        print(f"procedure_1\t{_annotated_sexpr(t.root, v1)}", file=out)
        print(f"procedure_2\t{_annotated_sexpr(t.root, v2)}", file=out)
        print(f"uniform_assignment_property\t{'true' if uap else 'false'}", file=out)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    report = verify_theorem(args.theorem, max_order=args.max_order)
    if args.format == "json":
        print(json.dumps(report.to_json(), sort_keys=True), file=out)
    else:
        print(f"theorem\t{report.theorem}", file=out)
        print(f"scope\t{report.scope}", file=out)
        print(f"instances\t{report.instances}", file=out)
        print(f"counterexamples\t{len(report.counterexamples)}", file=out)
        for cx in report.counterexamples:
            print(f"counterexample\t{cx}", file=out)
    return EXIT_OK if report.verified else EXIT_COUNTEREXAMPLES


def _cmd_realize(args, out) -> int:
    terms = list(args.terms)
    if not is_realizable_sequence(terms):
        raise ValueError(f"sequence {terms} is not realizable")
    g = realize_sequence(terms)
    conn = "yes" if is_connected(g) else "no"
    print(f"{to_graph6(g)}\tconnected: {conn}", file=out)
    return EXIT_OK


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.verb is None:
            raise UsageError("a verb is required (check, sequence, search, cotree, verify, realize)")
        handler = {
            "check": _cmd_check,
            "sequence": _cmd_sequence,
            "search": _cmd_search,
            "cotree": _cmd_cotree,
            "verify": _cmd_verify,
            "realize": _cmd_realize,
        }[args.verb]
        return handler(args, out)
    except UsageError as exc:
        print(f"usage-error\t{exc}", file=sys.stderr)
        return EXIT_USAGE
    except (Graph6Error, NotACographError, ValueError, OSError) as exc:
        print(f"input-error\t{exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
