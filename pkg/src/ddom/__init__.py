"""Single- and double-vertex dominators of single-sink DAGs.

Typical use::

    from ddom import load_graph, dominator_chain, is_double_dominator

    g = load_graph("circuit.dag")
    c = dominator_chain(g, g.vertex("u"))
    is_double_dominator(c, g.vertex("a"), g.vertex("b"))
"""

from .chain import DominatorChain, SegmentChain, dominator_chain, segment_chain
from .flowpaths import find_disjoint_paths
from .graph import (
    CycleError,
    Graph,
    GraphError,
    ParseError,
    Path,
    UnknownVertexError,
    add_fake_source,
    extract_cone,
    load_graph,
    merge_sources,
    parse_aiger_ascii,
    parse_edge_list,
    to_edge_list,
    topological_order,
)
from .query import (
    InconsistentPairSet,
    chain_from_pair_set,
    clusters,
    enumerate_all,
    immediate_double_dominator,
    is_double_dominator,
    matching_vector,
)
from .svdom import DominatorTree, compute_dominator_tree, single_dominator_chain, source_dominator_chain

__version__ = "0.1.0"

__all__ = [
    "CycleError",
    "DominatorChain",
    "DominatorTree",
    "Graph",
    "GraphError",
    "InconsistentPairSet",
    "ParseError",
    "Path",
    "SegmentChain",
    "UnknownVertexError",
    "add_fake_source",
    "chain_from_pair_set",
    "clusters",
    "compute_dominator_tree",
    "dominator_chain",
    "enumerate_all",
    "extract_cone",
    "find_disjoint_paths",
    "immediate_double_dominator",
    "is_double_dominator",
    "load_graph",
    "matching_vector",
    "merge_sources",
    "parse_aiger_ascii",
    "parse_edge_list",
    "segment_chain",
    "single_dominator_chain",
    "source_dominator_chain",
    "to_edge_list",
    "topological_order",
]
