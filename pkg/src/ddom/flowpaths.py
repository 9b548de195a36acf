"""Vertex-disjoint paths by augmenting paths over unit vertex capacities.

Each vertex ``v`` other than the terminals is split into an in-half
(``2v``) and an out-half (``2v + 1``) joined by a capacity-one arc; the split
graph is never materialised.  Residual arcs let a later augmentation reroute
flow placed by an earlier one.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph, GraphError, Path


class FlowWork:
    """Reusable per-graph scratch arrays; lets many calls avoid O(|V|) setup."""

    def __init__(self, n: int):
        self.seen = [0] * (2 * n)
        self.parent = [0] * (2 * n)
        self.fsucc = [-1] * n
        self.fpred = [-1] * n
        self.stamp = 0


def _augment(g: Graph, src: int, sink: int, w: FlowWork, src_out: set, allowed) -> bool:
    fanout = g.fanout
    seen, parent, fsucc, fpred = w.seen, w.parent, w.fsucc, w.fpred
    w.stamp += 1
    stamp = w.stamp
    start = 2 * src + 1
    goal = 2 * sink
    seen[start] = stamp
    stack = []
    for x in reversed(fanout[src]):
        if x in src_out or (allowed is not None and not allowed[x]):
            continue
        m = 2 * x
        seen[m] = stamp
        parent[m] = start
        if m == goal:
            break
        stack.append(m)
    else:
        goal_hit = False
        # stack search in reverse fanout order, so declaration order is popped first
        while stack:
            node = stack.pop()
            v = node >> 1
            if node & 1:
                blocked = fsucc[v]
                for x in reversed(fanout[v]):
                    if x == blocked or (allowed is not None and not allowed[x]):
                        continue
                    m = 2 * x
                    if seen[m] != stamp:
                        seen[m] = stamp
                        parent[m] = node
                        if m == goal:
                            goal_hit = True
                            break
                        stack.append(m)
                if goal_hit:
                    break
                if fpred[v] >= 0:
                    m = node - 1
                    if seen[m] != stamp:
                        seen[m] = stamp
                        parent[m] = node
                        stack.append(m)
            else:
                p = fpred[v]
                m = node + 1 if p < 0 else 2 * p + 1
                if seen[m] != stamp:
                    seen[m] = stamp
                    parent[m] = node
                    stack.append(m)
        if not goal_hit:
            return False

    route = [goal]
    while route[-1] != start:
        route.append(parent[route[-1]])
    route.reverse()
    for a, b in zip(route, route[1:]):
        va, vb = a >> 1, b >> 1
        if va == vb:
            continue
        if a & 1:
            # forward edge va -> vb gains flow
            if va == src:
                src_out.add(vb)
            else:
                fsucc[va] = vb
            if vb != sink:
                fpred[vb] = va
        else:
            # reverse arc: cancel flow on edge vb -> va
            if vb == src:
                src_out.discard(va)
            elif fsucc[vb] == va:
                fsucc[vb] = -1
            if fpred[va] == vb:
                fpred[va] = -1
    return True


def find_disjoint_paths(
    g: Graph,
    src: int,
    sink: int,
    k: int = 3,
    allowed: Sequence[int] | None = None,
    work: FlowWork | None = None,
    seed: Sequence[int] | None = None,
) -> list[Path]:
    """Up to ``k`` paths from ``src`` to ``sink`` with pairwise disjoint interiors.

    Fewer than ``k`` paths means no ``k`` disjoint paths exist.  ``allowed``
    optionally masks the vertices the search may enter.  ``seed`` is an
    optional known ``src -> sink`` path used as the first unit of flow.
    """
    if src == sink:
        raise GraphError("source and sink coincide")
    if not 1 <= k <= 3:
        raise ValueError("k must be 1, 2 or 3")
    if work is None:
        work = FlowWork(g.n)
    src_out: set = set()
    rounds = 0
    if seed is not None:
        if seed[0] != src or seed[-1] != sink:
            raise GraphError("seed path does not join source and sink")
        src_out.add(seed[1])
        for a, b in zip(seed[1:], seed[2:]):
            work.fsucc[a] = b
            if b != sink:
                work.fpred[b] = a
        if len(seed) > 2:
            work.fpred[seed[1]] = src
        rounds = 1
    while rounds < k and _augment(g, src, sink, work, src_out, allowed):
        rounds += 1
    if rounds == 0:
        raise GraphError(f"{g.names[src]!r} does not reach {g.names[sink]!r}")

    paths = []
    for x in g.fanout[src]:
        if x in src_out:
            p = [src, x]
            while p[-1] != sink:
                p.append(work.fsucc[p[-1]])
            paths.append(Path(p))
    for p in paths:
        for v in p[1:-1]:
            work.fsucc[v] = work.fpred[v] = -1
    return paths
