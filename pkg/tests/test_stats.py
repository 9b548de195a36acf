from ddom.graph import parse_aiger_ascii
from ddom.stats import circuit_stats, format_table

from graphs import DIAMOND, G_SD, binary_tree, dag


def test_diamond_counts():
    st = circuit_stats(dag(DIAMOND))
    assert (st.single, st.double, st.useful) == (0, 1, 0)
    assert (st.inputs, st.outputs) == (1, 1)


def test_series_diamond_counts():
    st = circuit_stats(dag(G_SD))
    assert (st.single, st.double) == (1, 2)


def test_shared_dominators_counted_once_and_useful():
    g = dag("x1>u x2>u x3>u u>a u>b a>r b>r")
    st = circuit_stats(g)
    assert st.inputs == 3
    assert (st.single, st.double, st.useful) == (1, 1, 1)
    g = dag("x1>u x2>u u>a u>b a>r b>r")
    assert circuit_stats(g).useful == 0


def test_small_and_tree_has_no_pairs():
    st = circuit_stats(binary_tree(2))
    assert (st.inputs, st.gates, st.double) == (4, 3, 0)
    assert st.single == 2


def test_multi_output_sums_over_cones():
    # output n3 = n1 & n2, output n4 = n3 & n1: the cone of n4 contains n3's cone
    g = parse_aiger_ascii("aag 4 2 0 2 2\n2\n4\n6\n8\n6 2 4\n8 6 2\n")
    st = circuit_stats(g)
    assert (st.inputs, st.outputs, st.gates) == (2, 2, 2)
    assert st.single == 1  # n3 dominates n2 inside the cone of n4


def test_table_layout():
    text = format_table([("d.dag", circuit_stats(dag(DIAMOND)))])
    head, row = text.splitlines()
    assert head.split() == ["circuit", "inputs", "outputs", "gates", "1-doms", "2-doms", "useful"]
    assert row.split() == ["d.dag", "1", "1", "3", "0", "1", "0"]
