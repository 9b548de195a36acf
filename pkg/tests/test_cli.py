import json
import subprocess
import sys

import pytest

from ddom import cli, verify
from ddom.chain import DominatorChain, SegmentChain, dominator_chain
from ddom.graph import parse_edge_list, to_edge_list

from graphs import CHAIN, DIAMOND, TWELVE_PAIRS, G_LADDER, dag


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, edges in (("diamond", DIAMOND), ("ladder", G_LADDER), ("chain", CHAIN)):
        p = tmp_path / f"{name}.dag"
        p.write_text(to_edge_list(dag(edges)))
        out[name] = str(p)
    pairs = tmp_path / "twelve.pairs"
    pairs.write_text("# twelve pairs\n" + "\n".join(f"{a} {b}" for a, b in TWELVE_PAIRS) + "\n")
    out["twelve"] = str(pairs)
    bad = tmp_path / "bad.dag"
    bad.write_text("v u\nv r\ne u x\nroot r\n")
    out["bad"] = str(bad)
    return out


def run(capsys, *argv):
    code = cli.main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_chain_json_diamond(capsys, files):
    code, out, _ = run(capsys, "chain", "--graph", files["diamond"], "--source", "u")
    assert code == 0
    d = json.loads(out)
    assert d["pair_count"] == 1
    assert d["single_chain"] == ["u", "r"]
    assert d["segments"][0]["windows"] == {"a": {"min": 1, "max": 1}, "b": {"min": 1, "max": 1}}
    assert list(d) == ["source", "root", "single_chain", "segments", "pair_count"]


def test_chain_json_round_trips_byte_identical(capsys, files):
    _, out, _ = run(capsys, "chain", "--graph", files["ladder"], "--source", "u")
    assert json.loads(out)["pair_count"] == 3
    assert cli.dumps(json.loads(out)) == out


def test_chain_text(capsys, files):
    code, out, _ = run(capsys, "chain", "--graph", files["ladder"], "--source", "u", "--format", "text")
    assert code == 0
    assert "L: a1 a2" in out and "R: b1 b2" in out and out.endswith("pairs: 3\n")


def test_chain_from_pairs_file(capsys, files):
    code, out, _ = run(capsys, "chain", "--pairs", files["twelve"])
    assert code == 0
    d = json.loads(out)
    assert d["segments"][0]["left"] == list("aehkm")
    assert d["segments"][0]["right"] == list("bcdgln")
    assert d["segments"][0]["clusters"] == [
        {"l": list("aeh"), "r": list("bcdg")},
        {"l": list("km"), "r": list("ln")},
    ]
    assert d["source"] is None and d["pair_count"] == 12


def test_chain_errors(capsys, files):
    assert run(capsys, "chain", "--graph", files["bad"], "--source", "u")[0] == 2
    code, _, err = run(capsys, "chain", "--graph", files["diamond"], "--source", "zz")
    assert code == 3 and "zz" in err
    assert run(capsys, "chain", "--graph", files["diamond"], "--source", "r")[0] == 3
    assert run(capsys, "chain", "--graph", files["diamond"] + ".missing", "--source", "u")[0] == 2
    assert run(capsys, "chain", "--graph", files["diamond"])[0] == 2


def test_parse_error_reports_line(capsys, files):
    code, _, err = run(capsys, "idom", "--graph", files["bad"])
    assert code == 2 and ":3:" in err


@pytest.mark.parametrize(
    "graph, v, w, code, text",
    [("diamond", "a", "b", 0, "true"), ("diamond", "u", "a", 1, "false"), ("ladder", "a2", "b1", 1, "false")],
)
def test_query(capsys, files, graph, v, w, code, text):
    got, out, _ = run(capsys, "query", "--graph", files[graph], "--source", "u", v, w)
    assert (got, out.strip()) == (code, text)


def test_query_unknown_vertex(capsys, files):
    assert run(capsys, "query", "--graph", files["diamond"], "--source", "u", "a", "q")[0] == 3


def test_idom(capsys, files):
    code, out, _ = run(capsys, "idom", "--graph", files["chain"])
    assert code == 0 and out.splitlines() == ["u: a", "a: r"]
    _, out, _ = run(capsys, "idom", "--graph", files["diamond"])
    assert out.splitlines() == ["u: r", "a: r", "b: r"]


def test_stats(capsys, files):
    code, out, _ = run(capsys, "stats", "--graph", files["diamond"], "--graph", files["ladder"])
    assert code == 0
    rows = [line.split() for line in out.splitlines()]
    assert rows[0][1:] == ["inputs", "outputs", "gates", "1-doms", "2-doms", "useful"]
    assert rows[1][4:] == ["0", "1", "0"] and rows[2][4:] == ["0", "3", "0"]
    _, out, _ = run(capsys, "stats", "--graph", files["diamond"], "--format", "json")
    assert json.loads(out)[files["diamond"]]["2-doms"] == 1


def test_verify_random_passes(capsys):
    code, out, _ = run(capsys, "verify", "--random", "15", "--max-vertices", "20", "--seed", "7")
    assert code == 0 and "failures 0" in out


def test_verify_graph_and_source(capsys, files):
    assert run(capsys, "verify", "--graph", files["ladder"])[0] == 0
    assert run(capsys, "verify", "--graph", files["ladder"], "--source", "a1")[0] == 0
    assert run(capsys, "verify", "--graph", files["ladder"], "--source", "nope")[0] == 3
    assert run(capsys, "verify", "--graph", files["ladder"] + ".missing")[0] == 2
    assert run(capsys, "verify")[0] == 2


def test_verify_reports_counterexample(capsys, files, monkeypatch):
    def broken(g, u, tree=None):
        c = dominator_chain(g, u, tree)
        empty = tuple(SegmentChain(s.source, s.sink) for s in c.segments)
        return DominatorChain(c.source, c.root, c.single_chain, empty, c.names)

    monkeypatch.setattr(verify, "dominator_chain", broken)
    code, out, _ = run(capsys, "verify", "--graph", files["diamond"])
    assert code == 4
    assert "FAIL" in out
    dag_text = out.split("# counterexample, source u\n", 1)[1]
    assert parse_edge_list(dag_text) == dag(DIAMOND)


def test_module_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "ddom", "query", "--graph", files["diamond"], "--source", "u", "a", "b"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "true"
