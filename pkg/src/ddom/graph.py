"""Single-sink acyclic circuit graphs and the structural reductions used on them.

Vertices are dense integer ids.  Text formats and JSON always speak in vertex
names; ``Graph.names`` / ``Graph.vertex`` translate between the two.

AIGER negation markers are dropped on ingestion: dominators depend only on the
graph structure, so ``a & !b`` and ``a & b`` produce the same vertex.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

KINDS = ("input", "gate", "output", "virtual")


class GraphError(ValueError):
    pass


class ParseError(GraphError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class CycleError(GraphError):
    pass


class UnknownVertexError(GraphError):
    pass


def _kahn(n: int, fanout: Sequence[Sequence[int]]) -> list[int]:
    indeg = [0] * n
    for succ in fanout:
        for w in succ:
            indeg[w] += 1
    queue = deque(v for v in range(n) if indeg[v] == 0)
    order = []
    while queue:
        v = queue.popleft()
        order.append(v)
        for w in fanout[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    if len(order) != n:
        stuck = next(v for v in range(n) if indeg[v] > 0)
        raise CycleError(f"cycle through vertex {stuck}")
    return order


class Graph:
    """Immutable DAG with a designated sink ``root``.

    ``order`` is a topological order, ``rank[v]`` the position of ``v`` in it,
    and ``reaches_root[v]`` is 1 iff some path leads from ``v`` to ``root``.
    """

    def __init__(
        self,
        fanout: Sequence[Sequence[int]],
        root: int,
        kinds: Sequence[str] | None = None,
        names: Sequence[str] | None = None,
    ):
        n = len(fanout)
        if not 0 <= root < n:
            raise GraphError(f"root {root} out of range")
        self.n = n
        self.root = root
        self.fanout: list[list[int]] = [list(s) for s in fanout]
        self.fanin: list[list[int]] = [[] for _ in range(n)]
        for v, succ in enumerate(self.fanout):
            if len(set(succ)) != len(succ):
                raise GraphError(f"duplicate edge out of vertex {v}")
            for w in succ:
                if not 0 <= w < n:
                    raise GraphError(f"edge {v}->{w} leaves the vertex range")
                self.fanin[w].append(v)

        if names is None:
            names = [str(v) for v in range(n)]
        if len(names) != n:
            raise GraphError("name table size mismatch")
        self.names: list[str] = list(names)
        self.index = {name: v for v, name in enumerate(self.names)}
        if len(self.index) != n:
            raise GraphError("duplicate vertex name")

        if kinds is None:
            kinds = ["input" if not self.fanin[v] else "gate" for v in range(n)]
        if len(kinds) != n or any(k not in KINDS for k in kinds):
            raise GraphError("bad vertex kind table")
        self.kind: list[str] = list(kinds)

        self.order = _kahn(n, self.fanout)
        self.rank = [0] * n
        for i, v in enumerate(self.order):
            self.rank[v] = i

        reach = bytearray(n)
        reach[root] = 1
        for v in reversed(self.order):
            if not reach[v]:
                for w in self.fanout[v]:
                    if reach[w]:
                        reach[v] = 1
                        break
        self.reaches_root = reach

    @classmethod
    def from_edges(
        cls,
        names: Sequence[str],
        edges: Iterable[tuple[str, str]],
        root: str,
        kinds: Sequence[str] | None = None,
    ) -> "Graph":
        """Build a graph from vertex names and name pairs; handy for small fixtures."""
        index = {name: v for v, name in enumerate(names)}
        fanout: list[list[int]] = [[] for _ in names]
        for a, b in edges:
            fanout[index[a]].append(index[b])
        return cls(fanout, index[root], kinds, names)

    @property
    def num_edges(self) -> int:
        return sum(len(s) for s in self.fanout)

    def vertex(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex {name!r}") from None

    def edges(self) -> Iterable[tuple[int, int]]:
        for v, succ in enumerate(self.fanout):
            for w in succ:
                yield v, w

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.root == other.root
            and self.fanout == other.fanout
            and self.names == other.names
            and self.kind == other.kind
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.num_edges}, root={self.names[self.root]!r})"


class Path(tuple):
    """A vertex sequence whose consecutive elements are edges."""

    def __new__(cls, vertices: Iterable[int], g: Graph | None = None):
        self = super().__new__(cls, vertices)
        if not self:
            raise GraphError("empty path")
        if len(set(self)) != len(self):
            raise GraphError("path repeats a vertex")
        if g is not None:
            for a, b in zip(self, self[1:]):
                if b not in g.fanout[a]:
                    raise GraphError(f"{g.names[a]}->{g.names[b]} is not an edge")
        return self

    @property
    def source(self) -> int:
        return self[0]

    @property
    def sink(self) -> int:
        return self[-1]

    @property
    def internal(self) -> tuple[int, ...]:
        return tuple(self[1:-1])

    def concat(self, other: "Path") -> "Path":
        if self[-1] != other[0]:
            raise GraphError("paths do not share a terminal")
        return Path(tuple(self) + tuple(other[1:]))


def topological_order(g: Graph) -> list[int]:
    return list(g.order)


# -- text formats -----------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the ``.dag`` format: ``v NAME [KIND]``, ``e SRC DST``, ``root NAME``."""
    names: list[str] = []
    kinds: list[str | None] = []
    index: dict[str, int] = {}
    fanout: list[list[int]] = []
    seen_edges: set[tuple[int, int]] = set()
    root = None

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        head = tok[0]
        if head == "v":
            if len(tok) not in (2, 3):
                raise ParseError("expected 'v NAME [KIND]'", lineno)
            name = tok[1]
            if name in index:
                raise ParseError(f"vertex {name!r} declared twice", lineno)
            kind = tok[2] if len(tok) == 3 else None
            if kind is not None and kind not in KINDS:
                raise ParseError(f"unknown vertex kind {kind!r}", lineno)
            index[name] = len(names)
            names.append(name)
            kinds.append(kind)
            fanout.append([])
        elif head == "e":
            if len(tok) != 3:
                raise ParseError("expected 'e SRC DST'", lineno)
            for name in tok[1:]:
                if name not in index:
                    raise ParseError(f"undeclared vertex {name!r}", lineno)
            a, b = index[tok[1]], index[tok[2]]
            if (a, b) in seen_edges:
                raise ParseError(f"duplicate edge {tok[1]} -> {tok[2]}", lineno)
            seen_edges.add((a, b))
            fanout[a].append(b)
        elif head == "root":
            if len(tok) != 2:
                raise ParseError("expected 'root NAME'", lineno)
            if tok[1] not in index:
                raise ParseError(f"undeclared vertex {tok[1]!r}", lineno)
            if root is not None:
                raise ParseError("root declared twice", lineno)
            root = index[tok[1]]
        else:
            raise ParseError(f"unknown statement {head!r}", lineno)

    if root is None:
        raise ParseError("missing 'root' statement")
    has_fanin = [False] * len(names)
    for succ in fanout:
        for w in succ:
            has_fanin[w] = True
    resolved = [k if k is not None else ("gate" if has_fanin[v] else "input") for v, k in enumerate(kinds)]
    try:
        return Graph(fanout, root, resolved, names)
    except CycleError as exc:
        raise CycleError(f"cycle detected: {exc}") from None


def to_edge_list(g: Graph) -> str:
    lines = [f"v {name} {kind}" for name, kind in zip(g.names, g.kind)]
    lines += [f"e {g.names[a]} {g.names[b]}" for a, b in g.edges()]
    lines.append(f"root {g.names[g.root]}")
    return "\n".join(lines) + "\n"


def parse_aiger_ascii(text: str) -> Graph:
    """Parse combinational ASCII AIGER (``aag``).

    Literal polarity is ignored and constant fanins are dropped; neither changes
    which vertices dominate which.  Several outputs are joined by an appended
    ``virtual`` root.
    """
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty file", 1)
    header = lines[0].split()
    if len(header) != 6 or header[0] != "aag":
        raise ParseError("expected header 'aag M I L O A'", 1)
    try:
        m, ni, nl, no, na = map(int, header[1:])
    except ValueError:
        raise ParseError("non-integer header field", 1) from None
    if min(m, ni, nl, no, na) < 0:
        raise ParseError("negative header field", 1)
    if nl != 0:
        raise ParseError("sequential AIGER (L != 0) is not supported", 1)
    if ni + na > m:
        raise ParseError("M is smaller than I + A", 1)
    if no == 0:
        raise ParseError("no outputs", 1)
    need = 1 + ni + no + na
    if len(lines) < need:
        raise ParseError("truncated file", len(lines))

    def literal(tok: str, lineno: int) -> int:
        try:
            lit = int(tok)
        except ValueError:
            raise ParseError(f"bad literal {tok!r}", lineno) from None
        if lit < 0 or lit // 2 > m:
            raise ParseError(f"literal {lit} out of range", lineno)
        return lit

    kind: dict[int, str] = {}
    fanin: dict[int, list[int]] = {}
    inputs: list[int] = []
    for k in range(ni):
        lineno = 2 + k
        tok = lines[lineno - 1].split()
        if len(tok) != 1:
            raise ParseError("expected one input literal", lineno)
        lit = literal(tok[0], lineno)
        if lit % 2 or lit == 0 or lit // 2 in kind:
            raise ParseError(f"bad input literal {lit}", lineno)
        kind[lit // 2] = "input"
        inputs.append(lit // 2)
    outputs: list[int] = []
    for k in range(no):
        lineno = 2 + ni + k
        tok = lines[lineno - 1].split()
        if len(tok) != 1:
            raise ParseError("expected one output literal", lineno)
        outputs.append(literal(tok[0], lineno) // 2)
    for k in range(na):
        lineno = 2 + ni + no + k
        tok = lines[lineno - 1].split()
        if len(tok) != 3:
            raise ParseError("expected 'LHS RHS0 RHS1'", lineno)
        lhs, r0, r1 = (literal(t, lineno) for t in tok)
        if lhs % 2 or lhs == 0 or lhs // 2 in kind:
            raise ParseError(f"bad AND literal {lhs}", lineno)
        kind[lhs // 2] = "gate"
        fanin[lhs // 2] = [r0 // 2, r1 // 2]

    symbols: dict[int, str] = {}
    for k, raw in enumerate(lines[need:], need + 1):
        if raw.startswith("c"):
            break
        tok = raw.split(None, 1)
        if len(tok) == 2 and tok[0][:1] == "i" and tok[0][1:].isdigit():
            pos = int(tok[0][1:])
            if pos < len(inputs):
                symbols[inputs[pos]] = tok[1].strip()

    for var in set(outputs) | {x for fi in fanin.values() for x in fi}:
        if var != 0 and var not in kind:
            raise ParseError(f"variable {var} used but never defined")

    variables = sorted(kind)
    ids = {var: i for i, var in enumerate(variables)}
    names = []
    taken = set()
    for var in variables:
        name = symbols.get(var, f"n{var}")
        if name in taken or not name or any(c.isspace() for c in name):
            name = f"n{var}"
        taken.add(name)
        names.append(name)
    fanout: list[list[int]] = [[] for _ in variables]
    for var in variables:
        for src in dict.fromkeys(fanin.get(var, ())):
            if src != 0:
                fanout[ids[src]].append(ids[var])
    kinds = [kind[var] for var in variables]

    outs = [v for v in dict.fromkeys(outputs) if v != 0]
    if not outs:
        raise ParseError("all outputs are constant")
    if len(outputs) == 1:
        root = ids[outs[0]]
    else:
        root = len(variables)
        rname = "root"
        while rname in taken:
            rname = "_" + rname
        names.append(rname)
        kinds.append("virtual")
        fanout.append([])
        for var in outs:
            fanout[ids[var]].append(root)
    return Graph(fanout, root, kinds, names)


def load_graph(path: str) -> Graph:
    """Read a ``.aag`` or ``.dag`` file, choosing the parser by extension."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".aag"):
        return parse_aiger_ascii(text)
    return parse_edge_list(text)


# -- reductions -------------------------------------------------------------


def _fresh_name(g: Graph, base: str) -> str:
    name = base
    k = 1
    while name in g.index:
        name = f"{base}{k}"
        k += 1
    return name


def _with_extra_source(g: Graph, succ: list[int], name: str) -> tuple[Graph, int]:
    fanout = [list(s) for s in g.fanout] + [succ]
    new = g.n
    return Graph(fanout, g.root, g.kind + ["virtual"], g.names + [_fresh_name(g, name)]), new


def merge_sources(g: Graph, sources: Iterable[int]) -> tuple[Graph, int]:
    """Append one vertex that feeds everything the given sources feed."""
    srcs = list(dict.fromkeys(sources))
    if not srcs:
        raise GraphError("empty source set")
    if g.root in srcs:
        raise GraphError("the root cannot be merged into a source")
    succ = list(dict.fromkeys(w for v in srcs for w in g.fanout[v]))
    return _with_extra_source(g, succ, "vb")


def add_fake_source(g: Graph, b: Iterable[int]) -> tuple[Graph, int]:
    """Append one vertex feeding every vertex of ``b``.

    Dominators of the new vertex are the (not necessarily strict) dominators of ``b``.
    """
    targets = list(dict.fromkeys(b))
    if not targets:
        raise GraphError("empty vertex set")
    return _with_extra_source(g, targets, "fake")


def transitive_fanin(g: Graph, v: int) -> set[int]:
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for y in g.fanin[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def extract_cone(g: Graph, out: int) -> Graph:
    """Induced subgraph on the transitive fanin of ``out``, rooted at ``out``."""
    keep = sorted(transitive_fanin(g, out))
    ids = {v: i for i, v in enumerate(keep)}
    fanout = [[ids[w] for w in g.fanout[v] if w in ids] for v in keep]
    return Graph(fanout, ids[out], [g.kind[v] for v in keep], [g.names[v] for v in keep])


def primary_outputs(g: Graph) -> list[int]:
    """Vertices treated as outputs: the root, or the fanin of a virtual root."""
    if g.kind[g.root] == "virtual":
        return list(g.fanin[g.root])
    return [g.root]


def primary_inputs(g: Graph) -> list[int]:
    tagged = [v for v in range(g.n) if g.kind[v] == "input"]
    if tagged:
        return tagged
    return [v for v in range(g.n) if not g.fanin[v] and v != g.root]
