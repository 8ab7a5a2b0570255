import io
import json
import subprocess
import sys

import pytest

from topogen.cli import main
from topogen.multiaddress import FinalTupleAutomaton

from test_approximation import witness


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_multi_triangle(capsys, tmp_path):
    code, out, _ = run(capsys, "multi", "corpus:triangle", "--out", str(tmp_path))
    assert code == 0
    assert out.splitlines()[0] == "K = {2,4,6,12}"
    for k in (2, 4, 6, 12):
        d = json.loads((tmp_path / f"triangle.G{k}.json").read_text())
        assert d["arity"] == k
        assert FinalTupleAutomaton.from_dict(d).to_dict() == d


def test_neighbors_triangle(capsys, tmp_path):
    code, out, _ = run(capsys, "neighbors", "corpus:triangle.ifs")
    assert code == 0
    assert json.loads(out)["counts"] == {"states": 16, "edges": 42}
    code, out, _ = run(capsys, "neighbors", "corpus:triangle.ifs", "--out", str(tmp_path / "n.json"))
    assert code == 0 and out.strip() == "16 states, 42 edges"


def test_empty_stdin_is_usage_error(capsys, monkeypatch):
    code, out, err = run(capsys, "validate", "-", stdin="", monkeypatch=monkeypatch)
    assert code == 2 and out == ""
    diag = json.loads(err)
    assert diag["error"] == "usage" and diag["exit"] == 2


def test_validate_reports_violations(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"m": 2, "states": ["o", "x"], "initial": "o", "inverse": {"x": "x"},
                             "edges": [{"from": "o", "to": "o", "labels": [[0, 0], [1, 1]]},
                                       {"from": "o", "to": "x", "labels": [[0, 1]]}]}))
    code, out, _ = run(capsys, "validate", str(p))
    assert code == 1
    axioms = {v["axiom"] for v in json.loads(out)["violations"]}
    assert {"axiom1", "axiom3"} <= axioms


def test_usage_errors(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "pcf", "corpus:nope")[0] == 2
    assert run(capsys, "accept", "corpus:binary", "0(1)", "10")[0] == 2
    assert run(capsys, "approx", "corpus:binary")[0] == 2
    assert run(capsys, "pcf", "/nonexistent/file.json")[0] == 2


def test_domain_error(capsys):
    code, _, err = run(capsys, "class", "corpus:triangle", "21(2)", "--bound", "4")
    assert code == 1
    assert json.loads(err)["type"] == "ClassBoundExceeded"


def test_class_and_accept(capsys):
    code, out, _ = run(capsys, "class", "corpus:hata_complete", "0(1)")
    assert code == 0 and json.loads(out)["members"] == ["0(1)", "1(0)", "2(0)"]
    code, out, _ = run(capsys, "accept", "corpus:binary", "01", "10")
    assert json.loads(out) == {"accepted": True, "state": "right"}
    code, out, _ = run(capsys, "accept", "corpus:tent", "01(0)", "11(0)")
    assert json.loads(out) == {"accepted": True}


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--states", "2", "--digits", "2")
    assert code == 0 and json.loads(out)["count"] == 3


def test_pcf_diagonal_props(capsys):
    assert json.loads(run(capsys, "pcf", "corpus:binary")[1])["pcf"] is True
    d = json.loads(run(capsys, "diagonal", "corpus:weak_axiom4")[1])
    assert d["V0"] == ["o", "c"]
    assert json.loads(run(capsys, "props", "corpus:binary")[1])["clean"] is True


def test_render_is_stable(capsys):
    first = run(capsys, "render", "corpus:binary")
    second = run(capsys, "render", "corpus:binary")
    assert first == second and first[0] == 0
    assert first[1].startswith('digraph "automaton"')
    code, out, _ = run(capsys, "render", "corpus:exotic", "--word-graph", "--level", "3", "--format", "svg")
    assert code == 0 and out.startswith("<svg")


def test_render_empty_tuple(capsys, tmp_path):
    p = tmp_path / "g.json"
    p.write_text(json.dumps({"arity": 3, "initial": None, "states": [], "edges": []}))
    code, out, _ = run(capsys, "render", str(p))
    assert code == 0 and out == 'digraph "G3" {\n}\n'


def test_render_guard(capsys):
    code, _, err = run(capsys, "render", "corpus:triangle", "--space", "--level", "6", "--format", "svg")
    assert code == 1 and "dot" in json.loads(err)["message"]


def test_approx(capsys, tmp_path):
    code, out, _ = run(capsys, "approx", "corpus:square_incomplete", "--level", "1")
    d = json.loads(out)
    assert code == 0 and len(d["points"]) == 9 and d["connected"]
    code, out, _ = run(capsys, "approx", "corpus:exotic", "--level", "3", "--cut-point", "111")
    assert json.loads(out)["cut_point"] is True
    verts, arcs = witness()
    w = tmp_path / "w.json"
    w.write_text(json.dumps({"vertices": verts, "arcs": arcs}))
    code, out, _ = run(capsys, "approx", "corpus:exotic", "--level", "4", "--witness", str(w))
    assert code == 0 and json.loads(out)["pattern"] == "K3,3"
    arcs[0] = arcs[0][:-1]
    w.write_text(json.dumps({"vertices": verts, "arcs": arcs}))
    assert run(capsys, "approx", "corpus:exotic", "--level", "4", "--witness", str(w))[0] == 1


def test_verify_rep(capsys):
    code, out, _ = run(capsys, "verify-rep", "corpus:dog_carpet")
    assert code == 0 and json.loads(out)["ok"] is True


def test_corpus_listing(capsys):
    code, out, _ = run(capsys, "corpus")
    assert code == 0 and len(out.splitlines()) == 16
    code, out, _ = run(capsys, "corpus", "binary")
    assert json.loads(out)["initial"] == "o"


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "topogen.cli", "validate", "-"], input="", capture_output=True,
                          text=True)
    assert proc.returncode == 2
    assert json.loads(proc.stderr)["error"] == "usage"
