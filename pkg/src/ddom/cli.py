"""``ddom`` command-line front end.

Exit codes: 0 success (``query``: true), 1 ``query`` false, 2 unreadable or
malformed input, 3 unknown or unusable vertex, 4 ``verify`` mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .chain import DominatorChain, dominator_chain
from .graph import Graph, GraphError, ParseError, UnknownVertexError, load_graph, to_edge_list
from .query import InconsistentPairSet, chain_from_pair_set, clusters, is_double_dominator
from .stats import circuit_stats, format_table
from .svdom import compute_dominator_tree
from .verify import Report, verify_graph, verify_random

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_VERTEX, EXIT_MISMATCH = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _load(path: str) -> Graph:
    try:
        return load_graph(path)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror or exc}", EXIT_INPUT) from None
    except ParseError as exc:
        where = f"{path}:{exc.lineno}: " if exc.lineno else f"{path}: "
        raise CliError(where + str(exc), EXIT_INPUT) from None
    except GraphError as exc:
        raise CliError(f"{path}: {exc}", EXIT_INPUT) from None


def _vertex(g: Graph, name: str) -> int:
    try:
        return g.vertex(name)
    except UnknownVertexError as exc:
        raise CliError(str(exc), EXIT_VERTEX) from None


def _chain(g: Graph, name: str) -> DominatorChain:
    u = _vertex(g, name)
    try:
        return dominator_chain(g, u)
    except GraphError as exc:
        raise CliError(str(exc), EXIT_VERTEX) from None


def read_pairs(path: str) -> list[tuple[str, str]]:
    """One pair per line, two whitespace-separated names; ``#`` starts a comment."""
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror or exc}", EXIT_INPUT) from None
    pairs = []
    for lineno, line in enumerate(lines, 1):
        toks = line.split("#", 1)[0].split()
        if not toks:
            continue
        if len(toks) != 2 or toks[0] == toks[1]:
            raise CliError(f"{path}:{lineno}: expected two distinct names", EXIT_INPUT)
        pairs.append((toks[0], toks[1]))
    return pairs


def chain_to_dict(c: DominatorChain) -> dict:
    lab = c.label
    segs = []
    for seg, cl in zip(c.segments, clusters(c)):
        windows = {}
        for v in seg.left + seg.right:
            lo, hi = seg.windows[v]
            windows[lab(v)] = {"min": lo, "max": hi}
        segs.append(
            {
                "left": [lab(v) for v in seg.left],
                "right": [lab(v) for v in seg.right],
                "windows": windows,
                "clusters": [{"l": [lab(v) for v in l], "r": [lab(v) for v in r]} for l, r in cl],
            }
        )
    return {
        "source": None if c.source is None else lab(c.source),
        "root": None if c.root is None else lab(c.root),
        "single_chain": [lab(v) for v in c.single_chain],
        "segments": segs,
        "pair_count": c.pair_count(),
    }


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def chain_to_text(c: DominatorChain) -> str:
    d = chain_to_dict(c)
    out = []
    if d["source"] is not None:
        out.append(f"source: {d['source']}")
        out.append(f"root: {d['root']}")
        out.append("single chain: " + " ".join(d["single_chain"]))
    for k, seg in enumerate(d["segments"], 1):
        if not seg["left"]:
            continue
        out.append(f"segment {k}:")
        out.append("  L: " + " ".join(seg["left"]))
        out.append("  R: " + " ".join(seg["right"]))
        out.append("  windows: " + " ".join(f"{v}[{w['min']},{w['max']}]" for v, w in seg["windows"].items()))
        for cl in seg["clusters"]:
            out.append(f"  cluster: ({' '.join(cl['l'])}) | ({' '.join(cl['r'])})")
    out.append(f"pairs: {d['pair_count']}")
    return "\n".join(out) + "\n"


def cmd_chain(args: argparse.Namespace) -> int:
    if args.pairs:
        try:
            c = chain_from_pair_set(read_pairs(args.pairs))
        except InconsistentPairSet as exc:
            raise CliError(f"{args.pairs}: {exc}", EXIT_INPUT) from None
    else:
        if not args.graph or not args.source:
            raise CliError("chain needs --graph and --source", EXIT_INPUT)
        c = _chain(_load(args.graph), args.source)
    sys.stdout.write(dumps(chain_to_dict(c)) if args.format == "json" else chain_to_text(c))
    return EXIT_OK


def cmd_query(args: argparse.Namespace) -> int:
    g = _load(args.graph)
    c = _chain(g, args.source)
    hit = is_double_dominator(c, _vertex(g, args.v), _vertex(g, args.w))
    print("true" if hit else "false")
    return EXIT_OK if hit else EXIT_FALSE


def cmd_stats(args: argparse.Namespace) -> int:
    rows = [(path, circuit_stats(_load(path))) for path in args.graph]
    if args.format == "json":
        sys.stdout.write(dumps({path: st.as_dict() for path, st in rows}))
    else:
        print(format_table(rows))
    return EXIT_OK


def _print_report(r: Report) -> int:
    print(
        f"graphs {r.graphs}  sources {r.sources}  with pairs {r.nonempty}  "
        f"three-path segments {r.three_path_segments}  failures {len(r.failures)}"
    )
    if r.ok:
        return EXIT_OK
    for msg in r.failures[:20]:
        print("FAIL " + msg)
    print(f"# counterexample, source {r.counter_source}")
    sys.stdout.write(to_edge_list(r.counterexample))
    return EXIT_MISMATCH


def cmd_verify(args: argparse.Namespace) -> int:
    if args.graph:
        g = _load(args.graph)
        sources = [_vertex(g, args.source)] if args.source else None
        if sources and (sources[0] == g.root or not g.reaches_root[sources[0]]):
            raise CliError(f"vertex {args.source!r} has no chain", EXIT_VERTEX)
        r = verify_graph(g, sources, laws=not args.no_laws)
    elif args.random is not None:
        if args.random < 1 or args.max_vertices < 2:
            raise CliError("--random needs N >= 1 and --max-vertices >= 2", EXIT_INPUT)
        r = verify_random(args.random, args.max_vertices, args.seed, laws=not args.no_laws)
    else:
        raise CliError("verify needs --graph or --random", EXIT_INPUT)
    return _print_report(r)


def cmd_idom(args: argparse.Namespace) -> int:
    g = _load(args.graph)
    t = compute_dominator_tree(g)
    for v in range(g.n):
        if t.idom[v] is not None:
            print(f"{g.names[v]}: {g.names[t.idom[v]]}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ddom", description="Single- and double-vertex dominators of DAG circuits.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("chain", help="print the dominator chain of one source")
    c.add_argument("--graph", help=".dag or .aag file")
    c.add_argument("--source", help="source vertex name")
    c.add_argument("--format", choices=("json", "text"), default="json")
    c.add_argument("--pairs", help=argparse.SUPPRESS)
    c.set_defaults(func=cmd_chain)

    q = sub.add_parser("query", help="is {V,W} a double-vertex dominator of the source?")
    q.add_argument("--graph", required=True)
    q.add_argument("--source", required=True)
    q.add_argument("v", metavar="V")
    q.add_argument("w", metavar="W")
    q.set_defaults(func=cmd_query)

    s = sub.add_parser("stats", help="dominator counts per circuit")
    s.add_argument("--graph", required=True, action="append", help="repeatable")
    s.add_argument("--format", choices=("json", "text"), default="text")
    s.set_defaults(func=cmd_stats)

    v = sub.add_parser("verify", help="compare the engine against the brute-force oracle")
    v.add_argument("--graph")
    v.add_argument("--source")
    v.add_argument("--random", type=int, metavar="N")
    v.add_argument("--max-vertices", type=int, default=40, metavar="M")
    v.add_argument("--seed", type=int, default=0, metavar="S")
    v.add_argument("--no-laws", action="store_true", help="skip the pair-set law checks")
    v.set_defaults(func=cmd_verify)

    i = sub.add_parser("idom", help="immediate single-vertex dominator of every vertex")
    i.add_argument("--graph", required=True)
    i.set_defaults(func=cmd_idom)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"ddom: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
