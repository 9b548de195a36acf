"""Immediate single-vertex dominators toward the root.

Dominance here runs along paths *to* the root, so the dominator tree is the
classical one computed on the edge-reversed graph with the root as entry.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError


@dataclass(frozen=True)
class DominatorTree:
    root: int
    idom: tuple  # idom[v] is None for the root and for vertices that cannot reach it

    def reaches(self, v: int) -> bool:
        return v == self.root or self.idom[v] is not None


def compute_dominator_tree(g: Graph) -> DominatorTree:
    """Lengauer-Tarjan (simple link/eval with path compression), iterative."""
    n = g.n
    pred_in_rev = g.fanout  # predecessors in the reversed graph
    succ_in_rev = g.fanin

    # DFS numbering of the reversed graph from the root
    dfnum = [-1] * n
    vertex: list[int] = []
    parent = [-1] * n
    dfnum[g.root] = 0
    vertex.append(g.root)
    stack = [(g.root, iter(succ_in_rev[g.root]))]
    while stack:
        v, it = stack[-1]
        for w in it:
            if dfnum[w] < 0:
                dfnum[w] = len(vertex)
                vertex.append(w)
                parent[w] = v
                stack.append((w, iter(succ_in_rev[w])))
                break
        else:
            stack.pop()

    count = len(vertex)
    semi = list(range(count))  # in dfs numbers
    ancestor = [-1] * count
    label = list(range(count))
    idom_num = [0] * count
    bucket: list[list[int]] = [[] for _ in range(count)]
    par = [dfnum[parent[vertex[i]]] if i else -1 for i in range(count)]

    def evaluate(v: int) -> int:
        if ancestor[v] < 0:
            return v
        # collect the ancestor chain, then compress it top-down
        chain = []
        x = v
        while ancestor[ancestor[x]] >= 0:
            chain.append(x)
            x = ancestor[x]
        for x in reversed(chain):
            a = ancestor[x]
            if semi[label[a]] < semi[label[x]]:
                label[x] = label[a]
            ancestor[x] = ancestor[a]
        return label[v]

    for i in range(count - 1, 0, -1):
        w = vertex[i]
        for v in pred_in_rev[w]:
            j = dfnum[v]
            if j < 0:
                continue
            s = semi[evaluate(j)]
            if s < semi[i]:
                semi[i] = s
        bucket[semi[i]].append(i)
        p = par[i]
        ancestor[i] = p
        for j in bucket[p]:
            y = evaluate(j)
            idom_num[j] = y if semi[y] < semi[j] else p
        bucket[p].clear()

    for i in range(1, count):
        if idom_num[i] != semi[i]:
            idom_num[i] = idom_num[idom_num[i]]

    idom: list[int | None] = [None] * n
    for i in range(1, count):
        idom[vertex[i]] = vertex[idom_num[i]]
    return DominatorTree(g.root, tuple(idom))


def single_dominator_chain(t: DominatorTree, u: int) -> list[int]:
    """The idom-parent path ``u, idom(u), ..., root``."""
    if not t.reaches(u):
        raise GraphError(f"vertex {u} does not reach the root")
    chain = [u]
    while chain[-1] != t.root:
        chain.append(t.idom[chain[-1]])
    return chain


def _some_path(g: Graph, u: int, sink: int) -> list[int]:
    # depth-first, fanouts in declaration order, restricted to root-reaching vertices
    reach = g.reaches_root
    parent = {u: -1}
    stack = [u]
    while stack:
        v = stack.pop()
        if v == sink:
            path = [v]
            while parent[path[-1]] >= 0:
                path.append(parent[path[-1]])
            path.reverse()
            return path
        for w in reversed(g.fanout[v]):
            if reach[w] and w not in parent:
                parent[w] = v
                stack.append(w)
    raise GraphError(f"vertex {g.names[u]!r} does not reach {g.names[sink]!r}")


def source_dominator_chain(g: Graph, u: int) -> list[int]:
    """Single-dominator chain of one source without building the whole tree.

    Walks one u->root path and records, for each position, the furthest point
    on the path reachable from earlier positions through off-path vertices; a
    position nobody jumps over is a dominator.  Linear in the fanout cone of u.
    """
    return chain_and_path(g, u)[0]


def chain_and_path(g: Graph, u: int) -> tuple[list[int], list[int]]:
    """Like :func:`source_dominator_chain`, also returning the walked path."""
    if u == g.root:
        return [u], [u]
    path = _some_path(g, u, g.root)
    pos = [-1] * g.n
    for i, v in enumerate(path):
        pos[v] = i
    reach = g.reaches_root
    fanout = g.fanout
    seen = bytearray(g.n)
    chain = []
    furthest = 0
    for i, v in enumerate(path):
        if furthest <= i:
            chain.append(v)
        stack = [v]
        while stack:
            for y in fanout[stack.pop()]:
                j = pos[y]
                if j >= 0:
                    if j > furthest:
                        furthest = j
                elif not seen[y]:
                    seen[y] = 1
                    if reach[y]:
                        stack.append(y)
    return chain, path
