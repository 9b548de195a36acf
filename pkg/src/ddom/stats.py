"""Circuit-level dominator statistics.

For every primary output the cone is extracted and the chain of every
primary input in it is computed.  Within one cone, a dominator shared by
several inputs is counted once; counts are then summed over cones.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .chain import dominator_chain
from .graph import Graph, extract_cone, primary_inputs, primary_outputs
from .query import enumerate_all

USEFUL_MIN_INPUTS = 3
COLUMNS = ("inputs", "outputs", "gates", "1-doms", "2-doms", "useful")


@dataclass(frozen=True)
class CircuitStats:
    inputs: int
    outputs: int
    gates: int
    single: int  # distinct non-trivial single-vertex dominators
    double: int  # distinct double-vertex dominators
    useful: int  # double-vertex dominators of at least USEFUL_MIN_INPUTS inputs

    def row(self) -> tuple[int, ...]:
        return (self.inputs, self.outputs, self.gates, self.single, self.double, self.useful)

    def as_dict(self) -> dict:
        return dict(zip(COLUMNS, self.row()))


def cone_counts(cone: Graph) -> tuple[int, int, int]:
    singles: set[int] = set()
    pair_hits: Counter = Counter()
    for u in primary_inputs(cone):
        if u == cone.root or not cone.reaches_root[u]:
            continue
        c = dominator_chain(cone, u)
        singles.update(c.single_chain[1:-1])
        pair_hits.update(enumerate_all(c))
    useful = sum(1 for k in pair_hits.values() if k >= USEFUL_MIN_INPUTS)
    return len(singles), len(pair_hits), useful


def circuit_stats(g: Graph) -> CircuitStats:
    outs = primary_outputs(g)
    single = double = useful = 0
    for o in outs:
        s, d, k = cone_counts(extract_cone(g, o))
        single += s
        double += d
        useful += k
    gates = sum(1 for k in g.kind if k == "gate")
    return CircuitStats(len(primary_inputs(g)), len(outs), gates, single, double, useful)


def format_table(rows: list[tuple[str, CircuitStats]]) -> str:
    header = ("circuit",) + COLUMNS
    body = [(name,) + tuple(str(x) for x in st.row()) for name, st in rows]
    widths = [max(len(r[i]) for r in [header, *body]) for i in range(len(header))]
    lines = ["  ".join(cell.rjust(w) if i else cell.ljust(w) for i, (cell, w) in enumerate(zip(r, widths))) for r in [header, *body]]
    return "\n".join(lines)


__all__ = ["COLUMNS", "CircuitStats", "circuit_stats", "cone_counts", "format_table"]
