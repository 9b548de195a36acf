"""Engine-versus-oracle checks shared by the test suite and ``ddom verify``.

Every ``check_*`` function returns a list of human-readable failure messages;
an empty list means the check passed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, pairwise, permutations
from typing import Iterable

from .chain import DominatorChain, dominator_chain
from .flowpaths import find_disjoint_paths
from .graph import Graph
from .oracle import (
    immediate_double_oracle,
    oracle_dominates,
    oracle_double,
    oracle_single,
    random_dag,
    reaches_excluding,
)
from .query import enumerate_all, immediate_double_dominator, is_double_dominator, matching_vector
from .svdom import DominatorTree, compute_dominator_tree, source_dominator_chain


def valid_sources(g: Graph) -> list[int]:
    return [v for v in range(g.n) if v != g.root and g.reaches_root[v]]


def _fmt(g: Graph, pairs: Iterable[frozenset]) -> str:
    return "{" + ", ".join(sorted("{" + ",".join(sorted(g.names[v] for v in p)) + "}" for p in pairs)) + "}"


def check_equivalence(g: Graph, u: int, c: DominatorChain, tree: DominatorTree | None = None) -> list[str]:
    """Single chain, pair set and immediate pair against the oracle."""
    out = []
    name = g.names[u]
    if tree is not None:
        other = [u]
        while other[-1] != g.root:
            other.append(tree.idom[other[-1]])
        if list(c.single_chain) != other:
            out.append(f"{name}: single chain differs between tree and sweep")
    if list(c.single_chain) != source_dominator_chain(g, u):
        out.append(f"{name}: single chain differs from source sweep")
    if set(c.single_chain[1:-1]) != oracle_single(g, u):
        out.append(f"{name}: single dominators differ from oracle")
    got = list(enumerate_all(c))
    want = oracle_double(g, u)
    if len(got) != len(set(got)):
        out.append(f"{name}: enumeration repeats a pair")
    if set(got) != want:
        out.append(f"{name}: pairs {_fmt(g, got)} != oracle {_fmt(g, want)}")
    imm = immediate_double_dominator(c)
    if want:
        ref = immediate_double_oracle(g, want)
        if ref != [imm]:
            out.append(f"{name}: immediate pair {imm} != oracle {ref}")
    elif imm is not None:
        out.append(f"{name}: immediate pair reported for an empty pair set")
    return out


def check_structure(c: DominatorChain, n: int | None = None) -> list[str]:
    """Staircase windows, window symmetry, overlap law, cluster partition.

    With ``n`` given, also checks that at most ``n`` vertices are listed.
    """
    out = []
    lab = c.label
    name = "chain" if c.source is None else lab(c.source)
    listed = 0
    for k, seg in enumerate(c.segments):
        listed += len(seg.left) + len(seg.right)
        for side, other in ((seg.left, seg.right), (seg.right, seg.left)):
            prev = (0, 0)
            for v in side:
                lo, hi = seg.windows[v]
                if not 1 <= lo <= hi <= len(other):
                    out.append(f"{name}: bad window for {lab(v)}")
                if lo < prev[0] or hi < prev[1]:
                    out.append(f"{name}: windows not monotone at {lab(v)}")
                prev = (lo, hi)
        for i, v in enumerate(seg.left, 1):
            for j, w in enumerate(seg.right, 1):
                a = seg.windows[v][0] <= j <= seg.windows[v][1]
                b = seg.windows[w][0] <= i <= seg.windows[w][1]
                if a != b:
                    out.append(f"{name}: window symmetry fails for {lab(v)},{lab(w)}")
        for side in (seg.left, seg.right):
            for v, v2 in combinations(side, 2):
                m1, m2 = matching_vector(c, v), matching_vector(c, v2)
                common = [x for x in m1 if x in m2]
                if not common:
                    continue
                k1 = len(common)
                ok = (m1[-k1:] == tuple(common) and m2[:k1] == tuple(common)) or (
                    m2[-k1:] == tuple(common) and m1[:k1] == tuple(common)
                )
                if not ok:
                    out.append(f"{name}: overlap of {lab(v)} and {lab(v2)} is not suffix/prefix")
        covered_l = [0] * len(seg.left)
        covered_r = [0] * len(seg.right)
        for (l0, l1), (r0, r1) in seg.clusters:
            for i in range(l0, l1 + 1):
                covered_l[i - 1] += 1
                lo, hi = seg.windows[seg.left[i - 1]]
                if lo < r0 or hi > r1:
                    out.append(f"{name}: window crosses a cluster boundary")
            for j in range(r0, r1 + 1):
                covered_r[j - 1] += 1
        if any(x != 1 for x in covered_l + covered_r):
            out.append(f"{name}: clusters do not partition segment {k}")
    if n is not None and listed > n:
        out.append(f"{name}: chain lists {listed} vertices for {n}")
    return out


def check_locality(g: Graph, c: DominatorChain, pairs: Iterable[frozenset]) -> list[str]:
    """Every pair lies strictly between two consecutive single dominators."""
    out = []
    for p in pairs:
        v, w = tuple(p)
        inside = any(
            reaches_excluding(g, a, v, ()) and reaches_excluding(g, v, b, ())
            and reaches_excluding(g, a, w, ()) and reaches_excluding(g, w, b, ())
            for a, b in pairwise(c.single_chain)
        )
        if not inside or v in c.single_chain or w in c.single_chain:
            out.append(f"{g.names[c.source]}: pair {_fmt(g, [p])} straddles a single dominator")
    return out


def check_three_path_guard(g: Graph, c: DominatorChain) -> tuple[int, list[str]]:
    """Segments with three disjoint paths must be empty; returns (segments hit, failures)."""
    hits = 0
    out = []
    for seg in c.segments:
        a, b = seg.source, seg.sink
        if len(find_disjoint_paths(g, a, b, 3, allowed=g.reaches_root)) < 3:
            continue
        hits += 1
        if seg:
            out.append(f"{g.names[c.source]}: non-empty segment despite three disjoint paths")
        if oracle_double(g, a, b):
            out.append(f"{g.names[c.source]}: oracle finds pairs in a three-path segment")
    return hits, out


def check_queries(g: Graph, c: DominatorChain, pairs: set[frozenset]) -> list[str]:
    out = []
    for v in range(g.n):
        for w in range(g.n):
            got = is_double_dominator(c, v, w)
            if got != (v != w and frozenset((v, w)) in pairs):
                out.append(f"{g.names[c.source]}: query ({g.names[v]},{g.names[w]}) returned {got}")
    return out


def check_laws(g: Graph, pairs: set[frozenset]) -> list[str]:
    """Partial-order, shared-vertex and swap laws over one pair set."""
    out = []
    ps = sorted(pairs, key=sorted)
    verts = sorted({v for p in ps for v in p})
    # dom[(p, v)]: pair p dominates vertex v
    dom = {(p, v): oracle_dominates(g, p, (v,)) for p in ps for v in verts}

    def dominates(a: frozenset, b: frozenset) -> bool:
        return all(dom[(a, v)] for v in b)

    for a in ps:
        if not dominates(a, a):
            out.append(f"reflexivity fails for {_fmt(g, [a])}")
    for a, b in permutations(ps, 2):
        if dominates(a, b) and dominates(b, a):
            out.append(f"antisymmetry fails for {_fmt(g, [a, b])}")
    for a, b in permutations(ps, 2):
        if not dominates(a, b):
            continue
        for x in ps:
            if dominates(b, x) and not dominates(a, x):
                out.append(f"transitivity fails for {_fmt(g, [a, b, x])}")
    for a, b in combinations(ps, 2):
        shared = a & b
        if len(shared) == 1:
            (v2,) = shared
            (v1,) = a - shared
            (v3,) = b - shared
            if not (dom[(a, v3)] or dom[(b, v1)]):
                out.append(f"shared-vertex law fails for {_fmt(g, [a, b])}")
        elif not shared:
            for v1, v2 in permutations(a):
                for v3, v4 in permutations(b):
                    if dom[(b, v1)] or dom[(a, v4)]:
                        continue
                    if frozenset((v1, v4)) not in pairs or frozenset((v2, v3)) not in pairs:
                        out.append(f"swap law fails for {_fmt(g, [a, b])}")
                    if not (dom[(b, v2)] and dom[(a, v3)]):
                        out.append(f"cross-dominance law fails for {_fmt(g, [a, b])}")
    return out


@dataclass
class Report:
    graphs: int = 0
    sources: int = 0
    nonempty: int = 0
    three_path_segments: int = 0
    failures: list[str] = field(default_factory=list)
    counterexample: Graph | None = None
    counter_source: str | None = None

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_graph(
    g: Graph, sources: Iterable[int] | None = None, report: Report | None = None, laws: bool = True
) -> Report:
    """Run the full check set for ``sources`` (default: every valid source)."""
    r = report if report is not None else Report()
    r.graphs += 1
    tree = compute_dominator_tree(g)
    for u in valid_sources(g) if sources is None else sources:
        c = dominator_chain(g, u)
        pairs = oracle_double(g, u)
        fails = check_equivalence(g, u, c, tree)
        fails += check_structure(c, g.n)
        fails += check_locality(g, c, pairs)
        fails += check_queries(g, c, pairs)
        hits, more = check_three_path_guard(g, c)
        fails += more
        if laws:
            fails += check_laws(g, pairs)
        r.sources += 1
        r.nonempty += bool(pairs)
        r.three_path_segments += hits
        if fails and r.counterexample is None:
            r.counterexample = g
            r.counter_source = g.names[u]
        r.failures += fails
    return r


def random_corpus(count: int, max_vertices: int, seed: int, min_vertices: int = 4) -> Iterable[Graph]:
    """Seeded layered DAGs with 4..max_vertices vertices and density 0.1..0.5."""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(min(min_vertices, max_vertices), max_vertices)
        d = round(rng.uniform(0.1, 0.5), 3)
        yield random_dag(n, d, rng.randrange(2**32))


def verify_random(count: int, max_vertices: int, seed: int, laws: bool = True) -> Report:
    r = Report()
    for g in random_corpus(count, max_vertices, seed):
        verify_graph(g, report=r, laws=laws)
        if not r.ok:
            break
    return r


__all__ = [
    "Report",
    "check_equivalence",
    "check_laws",
    "check_locality",
    "check_queries",
    "check_structure",
    "check_three_path_guard",
    "random_corpus",
    "valid_sources",
    "verify_graph",
    "verify_random",
]
