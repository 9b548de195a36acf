from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from ddom.flowpaths import FlowWork, find_disjoint_paths
from ddom.graph import GraphError, Path
from ddom.oracle import random_dag

from graphs import DIAMOND, G_LADDER, TRIPLE_FAN, dag, scrambled_dag


def names(g, paths):
    return [tuple(g.names[v] for v in p) for p in paths]


def all_paths(g, a, b):
    out = []

    def walk(p):
        if p[-1] == b:
            out.append(p)
            return
        for w in g.fanout[p[-1]]:
            walk(p + [w])

    walk([a])
    return out


def brute_max_disjoint(g, a, b, k=3):
    interiors = [p[1:-1] for p in all_paths(g, a, b)]
    best = 0
    for r in range(1, k + 1):
        for combo in combinations(interiors, r):
            inner = [v for s in combo for v in s]
            if len(inner) == len(set(inner)):
                best = r
                break
        else:
            break
    return best


def check_paths(g, a, b, paths):
    seen = set()
    for p in paths:
        Path(p, g)
        assert p[0] == a and p[-1] == b
        assert not seen & set(p[1:-1])
        seen |= set(p[1:-1])
    assert len(set(map(tuple, paths))) == len(paths)


def test_diamond():
    g = dag(DIAMOND)
    paths = find_disjoint_paths(g, g.vertex("u"), g.root)
    assert names(g, paths) == [("u", "a", "r"), ("u", "b", "r")]


def test_triple_fan():
    g = dag(TRIPLE_FAN)
    assert len(find_disjoint_paths(g, g.vertex("u"), g.root)) == 3


def test_ladder_needs_rerouting():
    g = dag(G_LADDER)
    paths = find_disjoint_paths(g, g.vertex("u"), g.root, 3)
    assert len(paths) == 2
    check_paths(g, g.vertex("u"), g.root, paths)


def test_k_limits_and_errors():
    g = dag(TRIPLE_FAN)
    u = g.vertex("u")
    assert len(find_disjoint_paths(g, u, g.root, 1)) == 1
    assert len(find_disjoint_paths(g, u, g.root, 2)) == 2
    with pytest.raises(GraphError):
        find_disjoint_paths(g, u, u)
    with pytest.raises(ValueError):
        find_disjoint_paths(g, u, g.root, 4)
    h = dag("u>r x>r")
    with pytest.raises(GraphError):
        find_disjoint_paths(h, h.vertex("u"), h.vertex("x"))


def test_seed_path_is_rerouted():
    g = dag(G_LADDER)
    bad = [g.vertex(x) for x in ("u", "a1", "b2", "r")]
    paths = find_disjoint_paths(g, g.vertex("u"), g.root, 3, seed=bad)
    assert len(paths) == 2
    check_paths(g, g.vertex("u"), g.root, paths)


def test_work_arrays_are_left_clean():
    g = random_dag(30, 0.4, 3)
    w = FlowWork(g.n)
    first = find_disjoint_paths(g, 0, g.root, 3, work=w)
    assert all(x == -1 for x in w.fsucc) and all(x == -1 for x in w.fpred)
    assert find_disjoint_paths(g, 0, g.root, 3, work=w) == first


@settings(max_examples=150, deadline=None)
@given(st.integers(3, 10), st.floats(0.1, 0.6), st.integers(0, 10**6))
def test_count_matches_brute_force(n, p, seed):
    g = scrambled_dag(n, p, seed)
    for a in range(g.n):
        if a == g.root or not g.reaches_root[a]:
            continue
        got = find_disjoint_paths(g, a, g.root, 3)
        check_paths(g, a, g.root, got)
        assert len(got) == brute_max_disjoint(g, a, g.root)


def test_deterministic():
    g = random_dag(40, 0.4, 9)
    assert find_disjoint_paths(g, 0, g.root) == find_disjoint_paths(g, 0, g.root)
