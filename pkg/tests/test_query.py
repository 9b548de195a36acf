import ast
import inspect

import pytest
from hypothesis import given, settings, strategies as st

from ddom import query
from ddom.chain import dominator_chain
from ddom.oracle import immediate_double_oracle, oracle_double
from ddom.query import (
    InconsistentPairSet,
    chain_from_pair_set,
    clusters,
    enumerate_all,
    immediate_double_dominator,
    is_double_dominator,
    matching_vector,
)
from ddom.verify import check_equivalence, check_laws, check_queries, check_structure

from graphs import CHAIN, DIAMOND, TWELVE_PAIRS, G_LADDER, G_SD, G_SKIP, dag, named, scrambled_dag

TWELVE_VECTORS = {
    "a": "bcd", "b": "a", "c": "aeh", "d": "aeh", "e": "cd", "g": "h",
    "h": "cdg", "k": "ln", "l": "km", "m": "ln", "n": "km",
}


@pytest.fixture(scope="module")
def twelve():
    return chain_from_pair_set(TWELVE_PAIRS)


def test_twelve_partition(twelve):
    (seg,) = twelve.segments
    assert seg.left == tuple("aehkm")
    assert seg.right == tuple("bcdgln")


@pytest.mark.parametrize("v", sorted(TWELVE_VECTORS))
def test_twelve_matching_vectors(twelve, v):
    assert matching_vector(twelve, v) == tuple(TWELVE_VECTORS[v])


def test_twelve_clusters(twelve):
    assert clusters(twelve) == [[(tuple("aeh"), tuple("bcdg")), (tuple("km"), tuple("ln"))]]


def test_twelve_queries(twelve):
    assert is_double_dominator(twelve, "h", "g")
    assert is_double_dominator(twelve, "g", "h")
    assert not is_double_dominator(twelve, "a", "e")
    assert not is_double_dominator(twelve, "a", "l")
    assert not is_double_dominator(twelve, "a", "a")
    assert not is_double_dominator(twelve, "a", "zz")


def test_twelve_enumeration(twelve):
    got = list(enumerate_all(twelve))
    assert len(got) == 12 and set(got) == {frozenset(p) for p in TWELVE_PAIRS}
    assert twelve.pair_count() == 12
    assert immediate_double_dominator(twelve) == frozenset("ab")


def test_unlisted_vertex_has_empty_vector(twelve):
    assert matching_vector(twelve, "zz") == ()


def test_pair_set_small_cases():
    c = chain_from_pair_set([("a", "b")])
    assert c.segments[0].left == ("a",) and c.segments[0].right == ("b",)
    c = chain_from_pair_set([("a", "b"), ("c", "d"), ("a", "d")])
    seg = c.segments[0]
    assert seg.left == ("a", "c") and seg.right == ("b", "d")
    assert seg.windows["a"] == (1, 2) and seg.windows["c"] == (2, 2)
    empty = chain_from_pair_set([])
    assert not empty.segments[0] and immediate_double_dominator(empty) is None


@pytest.mark.parametrize(
    "pairs",
    [
        [("a", "b"), ("b", "c"), ("a", "c")],  # odd cycle
        [("a", "x"), ("a", "y"), ("b", "y"), ("b", "z"), ("c", "z"), ("c", "x")],  # ring, no staircase
        [("a", "a")],
    ],
)
def test_inconsistent_pair_sets(pairs):
    with pytest.raises(InconsistentPairSet):
        chain_from_pair_set(pairs)


def test_diamond_queries():
    g = dag(DIAMOND)
    c = dominator_chain(g, g.vertex("u"))
    a, b, u = g.vertex("a"), g.vertex("b"), g.vertex("u")
    assert is_double_dominator(c, a, b) and not is_double_dominator(c, u, a)
    assert named(g, enumerate_all(c)) == {frozenset("ab")}
    assert [[tuple(g.names[v] for v in side) for side in cl] for cl in clusters(c)[0]] == [[("a",), ("b",)]]


def test_ladder_queries():
    g = dag(G_LADDER)
    c = dominator_chain(g, g.vertex("u"))
    assert len(list(enumerate_all(c))) == 3
    assert not is_double_dominator(c, g.vertex("a2"), g.vertex("b1"))
    assert named(g, [immediate_double_dominator(c)]) == {frozenset(["a1", "b1"])}


def test_series_diamond_immediate():
    g = dag(G_SD)
    c = dominator_chain(g, g.vertex("u"))
    assert named(g, [immediate_double_dominator(c)]) == {frozenset("ab")}


def test_chain_has_no_immediate_pair():
    g = dag(CHAIN)
    assert immediate_double_dominator(dominator_chain(g, g.vertex("u"))) is None


def test_skip_clusters():
    g = dag(G_SKIP)
    c = dominator_chain(g, g.vertex("u"))
    ((left, right),) = clusters(c)[0]
    assert [g.names[v] for v in left] == ["a1", "a3"] and [g.names[v] for v in right] == ["b"]


def test_query_has_no_loops():
    tree = ast.parse(inspect.getsource(query.is_double_dominator))
    loops = (ast.For, ast.While, ast.AsyncFor, ast.comprehension)
    assert not [n for n in ast.walk(tree) if isinstance(n, loops)]
    calls = {n.func.attr if isinstance(n.func, ast.Attribute) else n.func.id for n in ast.walk(tree) if isinstance(n, ast.Call)}
    assert calls <= {"get"}


@settings(max_examples=100, deadline=None)
@given(st.integers(3, 16), st.floats(0.1, 0.7), st.integers(0, 10**6))
def test_chain_laws_on_scrambled_graphs(n, p, seed):
    g = scrambled_dag(n, p, seed)
    for u in range(g.n):
        if u == g.root or not g.reaches_root[u]:
            continue
        c = dominator_chain(g, u)
        pairs = oracle_double(g, u)
        assert check_equivalence(g, u, c) == []
        assert check_structure(c, g.n) == []
        assert check_queries(g, c, pairs) == []
        assert check_laws(g, pairs) == []
        if pairs:
            assert immediate_double_oracle(g, pairs) == [immediate_double_dominator(c)]


@settings(max_examples=100, deadline=None)
@given(st.integers(3, 30), st.floats(0.1, 0.6), st.integers(0, 10**6))
def test_pair_set_round_trip(n, p, seed):
    g = scrambled_dag(n, p, seed)
    for u in range(g.n):
        if u == g.root or not g.reaches_root[u]:
            continue
        pairs = named(g, enumerate_all(dominator_chain(g, u)))
        rebuilt = chain_from_pair_set(pairs)
        assert set(enumerate_all(rebuilt)) == pairs
        assert check_structure(rebuilt) == []
