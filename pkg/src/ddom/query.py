"""Queries over dominator chains, and chain reconstruction from explicit pair sets."""

from __future__ import annotations

from collections import deque
from typing import Hashable, Iterable, Iterator

from .chain import LEFT, DominatorChain, SegmentChain, construct_clusters


class InconsistentPairSet(ValueError):
    pass


def is_double_dominator(c: DominatorChain, v, w) -> bool:
    """Constant time: same segment, opposite sides, ``w`` inside ``v``'s window."""
    a = c.slots.get(v)
    b = c.slots.get(w)
    if a is None or b is None:
        return False
    if a[0] != b[0] or a[1] == b[1]:
        return False
    return a[3] <= b[2] <= a[4]


def matching_vector(c: DominatorChain, v) -> tuple:
    """Partners of ``v`` in chain order (source side first); empty if ``v`` is unlisted."""
    slot = c.slots.get(v)
    if slot is None:
        return ()
    seg = c.segments[slot[0]]
    other = seg.right if slot[1] == LEFT else seg.left
    return other[slot[3] - 1 : slot[4]]


def enumerate_all(c: DominatorChain) -> Iterator[frozenset]:
    for seg in c.segments:
        for v in seg.left:
            lo, hi = seg.windows[v]
            for w in seg.right[lo - 1 : hi]:
                yield frozenset((v, w))


def immediate_double_dominator(c: DominatorChain) -> frozenset | None:
    for seg in c.segments:
        if seg:
            return frozenset((seg.left[0], seg.right[0]))
    return None


def clusters(c: DominatorChain) -> list[list[tuple[tuple, tuple]]]:
    """Per segment, the complementary composition-vector pairs."""
    out = []
    for seg in c.segments:
        out.append(
            [
                (seg.left[l0 - 1 : l1], seg.right[r0 - 1 : r1])
                for (l0, l1), (r0, r1) in seg.clusters
            ]
        )
    return out


# -- reconstruction from explicit pairs ---------------------------------------


def _order_component(side_a: list, side_b: list, adj: dict, start) -> tuple[list, list] | None:
    """Breadth-first staircase order starting from ``start`` on side A.

    BFS layers of a staircase are contiguous blocks.  Inside a layer the
    lowest already-placed neighbour fixes where a window begins and, windows
    being contiguous, the degree fixes where it ends.
    """
    pos: dict = {start: 1}
    order_a, order_b = [start], []
    layer = [start]
    in_a = set(side_a)
    while layer:
        nxt = {w for v in layer for w in adj[v] if w not in pos}
        if not nxt:
            break
        target = order_b if next(iter(nxt)) not in in_a else order_a
        ranked = sorted(nxt, key=lambda w: (min(pos[x] for x in adj[w] if x in pos), len(adj[w]), w))
        for w in ranked:
            target.append(w)
            pos[w] = len(target)
        layer = ranked
    if len(order_a) != len(side_a) or len(order_b) != len(side_b):
        return None
    return order_a, order_b


def _windows(order_a: list, order_b: list, adj: dict) -> dict | None:
    ib = {w: i for i, w in enumerate(order_b, 1)}
    ia = {v: i for i, v in enumerate(order_a, 1)}
    win = {}
    for order, idx in ((order_a, ib), (order_b, ia)):
        prev = (0, 0)
        for v in order:
            ks = sorted(idx[w] for w in adj[v])
            lo, hi = ks[0], ks[-1]
            if hi - lo + 1 != len(ks) or lo < prev[0] or hi < prev[1]:
                return None
            prev = (lo, hi)
            win[v] = (lo, hi)
    return win


def chain_from_pair_set(pairs: Iterable[Iterable[Hashable]]) -> DominatorChain:
    """Assemble a one-segment chain whose enumeration is exactly ``pairs``.

    Each connected component of the pair graph is a complementary cluster
    pair.  The side holding the component's smallest label goes left;
    components are ordered by smallest label; within a component the
    staircase order (unique up to reversal and twin vertices) is fixed by
    taking the lexicographically smallest label sequence.
    """
    adj: dict = {}
    for p in pairs:
        p = tuple(set(p))
        if len(p) != 2:
            raise InconsistentPairSet(f"not a pair: {p!r}")
        a, b = p
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)

    color: dict = {}
    comps = []
    for v0 in sorted(adj):
        if v0 in color:
            continue
        color[v0] = 0
        comp = [v0]
        queue = deque([v0])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in color:
                    color[w] = 1 - color[v]
                    comp.append(w)
                    queue.append(w)
                elif color[w] == color[v]:
                    raise InconsistentPairSet(f"odd cycle through {v!r} and {w!r}")
        comps.append(comp)

    left: list = []
    right: list = []
    windows: dict = {}
    for comp in comps:
        lowest = min(comp)
        side_a = sorted(v for v in comp if color[v] == color[lowest])
        side_b = sorted(v for v in comp if color[v] != color[lowest])
        best = None
        for start in side_a:
            got = _order_component(side_a, side_b, adj, start)
            if got is None:
                continue
            win = _windows(*got, adj)
            if win is None:
                continue
            key = tuple(got[0]) + tuple(got[1])
            if best is None or key < best[0]:
                best = (key, got, win)
        if best is None:
            raise InconsistentPairSet(f"no staircase ordering for component of {lowest!r}")
        (order_a, order_b), win = best[1], best[2]
        la, lb = len(left), len(right)
        for v in order_a:
            lo, hi = win[v]
            windows[v] = (lo + lb, hi + lb)
        for w in order_b:
            lo, hi = win[w]
            windows[w] = (lo + la, hi + la)
        left += order_a
        right += order_b

    lw = [windows[v] for v in left]
    rw = [windows[w] for w in right]
    cl = tuple(construct_clusters(lw, rw)) if left else ()
    seg = SegmentChain(None, None, tuple(left), tuple(right), windows, cl)
    return DominatorChain(None, None, (), (seg,))
