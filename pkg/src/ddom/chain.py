"""All double-vertex dominators of one source in linear time.

The source's single-vertex dominators cut the problem into segments.  Inside
a segment two disjoint source->sink paths are found; every double-vertex
dominator has one vertex on each.  Two sweeps (one per path) record which path
positions are bypassed and how far detours between the paths reach; the
survivors and their partner windows form the chain.

Positions along a path are 1-based: ``P = (v1 = source, ..., v|P| = sink)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import pairwise
from typing import Hashable, Sequence

from .flowpaths import FlowWork, find_disjoint_paths
from .graph import Graph, GraphError
from .svdom import DominatorTree, chain_and_path, single_dominator_chain

LEFT, RIGHT = 0, 1


class PathTrack:
    """Per-position fields of one disjoint path during the sweeps."""

    def __init__(self, vertices: Sequence[int], sign: int = 1):
        size = len(vertices) + 1
        self.vertices = [-1, *vertices]
        self.sign = sign  # how this path's positions are stored in SweepScratch.on
        self.min = [0] * size
        self.max = [0] * size
        self.prime = [0] * size
        self.is_prime = [False] * size
        self.index: dict[int, int] = {}  # path position -> 1-based chain index

    def __len__(self) -> int:
        return len(self.vertices) - 1


@dataclass
class SweepScratch:
    marked: list[int]
    on: list[int]  # +i / -i: position i on the first / second path, 0: off both
    stamp: int = 0
    reached_p1: int = 0
    reached_p2: int = 1
    new_reached_p1: int = 0
    new_reached_p2: int = 1
    last_prime: int = 0

    @classmethod
    def for_graph(cls, g: Graph) -> "SweepScratch":
        return cls([0] * g.n, [0] * g.n)

    def clear_marks(self) -> None:
        self.stamp += 1

    def place(self, t1: PathTrack, t2: PathTrack) -> None:
        on = self.on
        for i in range(2, len(t1)):
            on[t1.vertices[i]] = i
        for i in range(2, len(t2)):
            on[t2.vertices[i]] = -i
        t1.sign, t2.sign = 1, -1

    def unplace(self, t1: PathTrack, t2: PathTrack) -> None:
        on = self.on
        for t in (t1, t2):
            for v in t.vertices[2:-1]:
                on[v] = 0


def find_reachable(x: int, t1: PathTrack, t2: PathTrack, g: Graph, s: SweepScratch) -> None:
    """Mark everything reachable from ``x`` through vertices off both paths.

    Updates ``s.new_reached_p1`` / ``s.new_reached_p2`` with the furthest
    positions touched.  Path vertices and the sink end the walk; marked
    vertices are never expanded twice.
    """
    fanout = g.fanout
    reach = g.reaches_root
    marked = s.marked
    stamp = s.stamp
    on = s.on
    sign = t1.sign
    sink = t1.vertices[-1]
    nr1 = s.new_reached_p1
    nr2 = s.new_reached_p2
    stack = [x]
    while stack:
        for y in fanout[stack.pop()]:
            if marked[y] == stamp:
                continue
            marked[y] = stamp
            k = on[y]
            if k:
                k *= sign
                if k > 0:
                    if k > nr1:
                        nr1 = k
                elif -k > nr2:
                    nr2 = -k
            elif y == sink:
                nr1 = len(t1)
                nr2 = len(t2)
            elif reach[y]:
                stack.append(y)
    s.new_reached_p1 = nr1
    s.new_reached_p2 = nr2


def assign_min_max(t1: PathTrack, t2: PathTrack, g: Graph, s: SweepScratch) -> None:
    """Sweep ``t1`` from source to sink.

    Sets ``t1.min`` (lowest admissible partner position on ``t2``), the prime
    flags and prime links of ``t1``, and ``t2.max`` (highest admissible partner
    position on ``t1``).  A non-prime position gets ``min = |P2|`` and links to
    its nearest prime ancestor; a prime links to its nearest prime descendant,
    with ``|P1|`` as the sentinel after the last prime.
    """
    n1, n2 = len(t1), len(t2)
    s.clear_marks()
    s.reached_p1, s.reached_p2 = 0, 1
    s.new_reached_p1, s.new_reached_p2 = 0, 1
    s.last_prime = 0
    mn, prime, is_prime = t1.min, t1.prime, t1.is_prime
    mx_other = t2.max
    verts = t1.vertices
    for i in range(1, n1):
        if s.reached_p1 > i:
            mn[i] = n2
            prime[i] = s.last_prime
            is_prime[i] = False
        else:
            mn[i] = s.reached_p2
            prime[s.last_prime] = i
            s.last_prime = i
            is_prime[i] = True
        find_reachable(verts[i], t1, t2, g, s)
        if s.reached_p1 < s.new_reached_p1:
            s.reached_p1 = s.new_reached_p1
        if s.reached_p2 >= s.new_reached_p2:
            # no new progress on the other path: nothing to record this round
            continue
        for j in range(s.reached_p2, s.new_reached_p2):
            mx_other[j] = i
        s.reached_p2 = s.new_reached_p2
    prime[s.last_prime] = n1


def construct_vector(t1: PathTrack, t2: PathTrack) -> list[int]:
    """Positions of ``t1`` that have at least one partner, in path order.

    Window ends are snapped onto prime positions of ``t2`` (forward for the
    low end, backward for the high end) and the survivors get consecutive
    1-based indices in ``t1.index``.
    """
    n2 = len(t2)
    out = []
    t1.index = {}
    for i in range(2, len(t1)):
        if not t1.is_prime[i]:
            continue
        lo, hi = t1.min[i], t1.max[i]
        if lo >= n2:
            continue
        if not t2.is_prime[lo]:
            lo = t2.prime[t2.prime[lo]]
        if not t2.is_prime[hi]:
            hi = t2.prime[hi]
        t1.min[i], t1.max[i] = lo, hi
        if lo <= hi:
            out.append(i)
            t1.index[i] = len(out)
    return out


def convert_min_max(cands: Sequence[int], t1: PathTrack, t2: PathTrack) -> list[tuple[int, int]]:
    """Rewrite candidate windows from ``t2`` path positions to ``t2`` chain indices."""
    return [(t2.index[t1.min[i]], t2.index[t1.max[i]]) for i in cands]


def construct_clusters(
    left: Sequence[tuple[int, int]], right: Sequence[tuple[int, int]]
) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Split staircase windows into maximal (left-range, right-range) blocks.

    Ranges are 1-based and inclusive.  Raises ``ValueError`` if the windows do
    not tile both sides.
    """
    out = []
    bl = br = 1
    while bl <= len(left):
        if left[bl - 1][0] != br:
            raise ValueError("windows do not form a staircase")
        el = bl
        er = left[el - 1][1]
        while True:
            nel = right[er - 1][1]
            if nel == el:
                break
            el = nel
            ner = left[el - 1][1]
            if ner == er:
                break
            er = ner
        out.append(((bl, el), (br, er)))
        bl, br = el + 1, er + 1
    if br != len(right) + 1:
        raise ValueError("right side not covered by clusters")
    return out


@dataclass(frozen=True)
class SegmentChain:
    """Double-vertex dominators of ``source`` with respect to ``sink``.

    ``windows[v] = (lo, hi)`` gives the 1-based index range of ``v``'s partners
    in the opposite list.
    """

    source: Hashable
    sink: Hashable
    left: tuple = ()
    right: tuple = ()
    windows: dict = field(default_factory=dict)
    clusters: tuple = ()

    def __bool__(self) -> bool:
        return bool(self.left)

    def flag(self, v) -> int | None:
        if v in self._side:
            return self._side[v][0]
        return None

    def index(self, v) -> int | None:
        if v in self._side:
            return self._side[v][1]
        return None

    @property
    def _side(self) -> dict:
        cache = self.__dict__.get("_side_cache")
        if cache is None:
            cache = {v: (LEFT, i) for i, v in enumerate(self.left, 1)}
            cache.update({v: (RIGHT, i) for i, v in enumerate(self.right, 1)})
            object.__setattr__(self, "_side_cache", cache)
        return cache

    def pair_count(self) -> int:
        return sum(self.windows[v][1] - self.windows[v][0] + 1 for v in self.left)


@dataclass(frozen=True)
class DominatorChain:
    """Single-dominator chain of ``source`` plus one segment per consecutive pair.

    ``slots[v] = (segment, flag, index, lo, hi)`` backs constant-time queries.
    """

    source: Hashable
    root: Hashable
    single_chain: tuple
    segments: tuple
    names: Sequence[str] | None = None
    slots: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        slots = {}
        for k, seg in enumerate(self.segments):
            for flag, side in ((LEFT, seg.left), (RIGHT, seg.right)):
                for i, v in enumerate(side, 1):
                    lo, hi = seg.windows[v]
                    slots[v] = (k, flag, i, lo, hi)
        object.__setattr__(self, "slots", slots)

    def label(self, v) -> str:
        return self.names[v] if self.names is not None else str(v)

    def pair_count(self) -> int:
        return sum(seg.pair_count() for seg in self.segments)


def _empty(src, sink) -> SegmentChain:
    return SegmentChain(src, sink)


def segment_chain(
    g: Graph,
    src: int,
    sink: int,
    s: SweepScratch | None = None,
    work: FlowWork | None = None,
    seed: Sequence[int] | None = None,
) -> SegmentChain:
    """Double-vertex dominators of ``src`` with respect to ``sink``.

    ``sink`` must be the immediate single dominator of ``src``; ``seed`` is an
    optional known ``src -> sink`` path.
    """
    if s is None:
        s = SweepScratch.for_graph(g)
    paths = find_disjoint_paths(g, src, sink, 3, allowed=g.reaches_root, work=work, seed=seed)
    if len(paths) != 2:
        # three disjoint paths leave no room for a pair; one means a bare edge
        return _empty(src, sink)
    p1, p2 = paths
    if len(p1) < 3 or len(p2) < 3:
        return _empty(src, sink)
    if g.rank[p2[1]] < g.rank[p1[1]]:
        p1, p2 = p2, p1
    t1, t2 = PathTrack(p1), PathTrack(p2)
    s.place(t1, t2)
    try:
        assign_min_max(t1, t2, g, s)
        assign_min_max(t2, t1, g, s)
    finally:
        s.unplace(t1, t2)
    lc = construct_vector(t1, t2)
    rc = construct_vector(t2, t1)
    lw = convert_min_max(lc, t1, t2)
    rw = convert_min_max(rc, t2, t1)
    left = tuple(t1.vertices[i] for i in lc)
    right = tuple(t2.vertices[j] for j in rc)
    windows = dict(zip(left, lw))
    windows.update(zip(right, rw))
    clusters = tuple(construct_clusters(lw, rw))
    return SegmentChain(src, sink, left, right, windows, clusters)


def dominator_chain(g: Graph, u: int, tree: DominatorTree | None = None) -> DominatorChain:
    """The dominator chain of ``u`` with respect to the root of ``g``.

    Pass a precomputed ``tree`` when many sources of one graph are processed;
    otherwise the single-dominator chain is found by a per-source sweep.
    """
    if u == g.root:
        raise GraphError("the root has no strict dominators")
    if not g.reaches_root[u]:
        raise GraphError(f"vertex {g.names[u]!r} does not reach the root")
    s = SweepScratch.for_graph(g)
    work = FlowWork(g.n)
    if tree is not None:
        single = single_dominator_chain(tree, u)
        segments = tuple(segment_chain(g, a, b, s, work) for a, b in pairwise(single))
    else:
        single, path = chain_and_path(g, u)
        # every single dominator lies on the walked path; its pieces seed the flow
        cut = [path.index(single[0])]
        for v in single[1:]:
            cut.append(path.index(v, cut[-1]))
        segments = tuple(
            segment_chain(g, a, b, s, work, path[i : j + 1])
            for (a, b), (i, j) in zip(pairwise(single), pairwise(cut))
        )
    return DominatorChain(u, g.root, tuple(single), segments, g.names)
