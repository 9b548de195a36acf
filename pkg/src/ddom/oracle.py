"""Brute-force reference semantics for dominator questions.

Everything here is plain graph search straight from the definitions and is
meant for small graphs (a few dozen vertices).  It shares no code with the
linear-time engine it is used to check.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Collection, Iterable

from .graph import Graph

Pair = frozenset
PairSet = set


def reaches_excluding(g: Graph, a: int, b: int, x: Collection[int]) -> bool:
    """True iff some path from ``a`` to ``b`` avoids every vertex in ``x``."""
    if a in x or b in x:
        return False
    seen = {a}
    stack = [a]
    while stack:
        v = stack.pop()
        if v == b:
            return True
        for w in g.fanout[v]:
            if w not in seen and w not in x:
                seen.add(w)
                stack.append(w)
    return False


def oracle_dominates(g: Graph, a: Collection[int], b: Iterable[int], sink: int | None = None) -> bool:
    """Every path from a vertex of ``b`` to ``sink`` meets ``a``."""
    if sink is None:
        sink = g.root
    a = set(a)
    return all(v in a or not reaches_excluding(g, v, sink, a) for v in b)


def oracle_is_dominator(g: Graph, a: Collection[int], b: Collection[int], sink: int | None = None) -> bool:
    """``a`` dominates ``b`` and no vertex of ``a`` can be dropped."""
    a = set(a)
    if not oracle_dominates(g, a, b, sink):
        return False
    return all(not oracle_dominates(g, a - {v}, b, sink) for v in a)


def _span(g: Graph, u: int, sink: int) -> set[int]:
    # vertices lying on some u -> sink path
    fwd = {u}
    stack = [u]
    while stack:
        v = stack.pop()
        for w in g.fanout[v]:
            if w not in fwd:
                fwd.add(w)
                stack.append(w)
    back = {sink}
    stack = [sink]
    while stack:
        v = stack.pop()
        for w in g.fanin[v]:
            if w not in back:
                back.add(w)
                stack.append(w)
    return fwd & back


def oracle_single(g: Graph, u: int, sink: int | None = None) -> set[int]:
    """Strict single-vertex dominators of ``u`` other than the sink."""
    if sink is None:
        sink = g.root
    return {
        v
        for v in range(g.n)
        if v not in (u, sink) and not reaches_excluding(g, u, sink, {v})
    }


def oracle_double(g: Graph, u: int, sink: int | None = None) -> set[frozenset]:
    """All double-vertex dominators of ``u`` as unordered pairs."""
    if sink is None:
        sink = g.root
    singles = oracle_single(g, u, sink)
    # a pair using a vertex off every u->sink path is redundant, so skip those
    cand = sorted(_span(g, u, sink) - singles - {u, sink})
    return {
        frozenset((v, w))
        for v, w in combinations(cand, 2)
        if not reaches_excluding(g, u, sink, {v, w})
    }


def pair_dominates(g: Graph, p: Collection[int], q: Collection[int], sink: int | None = None) -> bool:
    return oracle_dominates(g, p, q, sink)


def immediate_double_oracle(g: Graph, pairs: set[frozenset], sink: int | None = None) -> list[frozenset]:
    """Pairs dominated by every other pair (exactly one when ``pairs`` is non-empty)."""
    return [p for p in pairs if all(pair_dominates(g, q, p, sink) for q in pairs if q != p)]


def random_dag(n: int, edge_density: float, seed: int, max_width: int = 4) -> Graph:
    """Seeded layered DAG with source ``v0`` and root ``v{n-1}``.

    Vertices are split into layers of random width (1..max_width); every vertex
    gets a successor in the next layer and a predecessor in the previous one,
    plus extra forward edges with probability ``edge_density`` (next layer) and
    ``edge_density / 4`` (skipping one or two layers).
    """
    if n < 2:
        raise ValueError("need at least two vertices")
    rng = random.Random(seed)
    layers = [[0]]
    v = 1
    while v < n - 1:
        width = min(rng.randint(1, max_width), n - 1 - v)
        layers.append(list(range(v, v + width)))
        v += width
    layers.append([n - 1])

    fanout: list[list[int]] = [[] for _ in range(n)]
    edges = set()

    def add(a: int, b: int) -> None:
        if (a, b) not in edges:
            edges.add((a, b))
            fanout[a].append(b)

    for li in range(len(layers) - 1):
        cur, nxt = layers[li], layers[li + 1]
        for a in cur:
            add(a, rng.choice(nxt))
        for b in nxt:
            if not any((a, b) in edges for a in cur):
                add(rng.choice(cur), b)
        for a in cur:
            for b in nxt:
                if rng.random() < edge_density:
                    add(a, b)
            for later in layers[li + 2 : li + 4]:
                for b in later:
                    if rng.random() < edge_density / 4:
                        add(a, b)
    for succ in fanout:
        succ.sort()
    kinds = ["input"] + ["gate"] * (n - 1)
    return Graph(fanout, n - 1, kinds, [f"v{i}" for i in range(n)])
