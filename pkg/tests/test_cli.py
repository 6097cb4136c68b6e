import csv
import json
import subprocess
import sys

import pytest

from graphstirling.cli import main
from graphstirling.graphs import is_forest, component_count, read_graph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_word_views(capsys):
    assert run(capsys, "word", "xxDxxDxDDD", "--board")[1].strip() == "(1,3) (1,4) (1,5) (2,5)"
    assert run(capsys, "word", "xD", "--turns")[1].strip() == "(1,1)"


def test_word_json(capsys):
    code, out, _ = run(capsys, "word", "xxDxxDxDDD", "--board", "--below", "--turns", "--graph", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["board"]["squares"] == [[1, 3], [1, 4], [1, 5], [2, 5]]


def test_word_errors(capsys):
    code, _, err = run(capsys, "word", "xDDx")
    assert code == 2 and "prefix violation at position 3" in err
    assert run(capsys, "word", "xQ")[0] == 2


def test_stirling_word(capsys):
    code, out, _ = run(capsys, "stirling", "--word", "xxDxxDxDDD", "--method", "rook")
    assert code == 0 and json.loads(out)["values"] == ["0", "0", "0", "2", "4", "1"]


@pytest.mark.parametrize("method", ["enumerate", "weyl", "rook", "matching", "chromatic", "auto"])
def test_stirling_family_all_methods(capsys, method):
    code, out, _ = run(capsys, "stirling", "--family", "empty:3", "--method", method)
    assert code == 0 and json.loads(out)["values"] == ["0", "1", "3", "1"]


def test_stirling_graph_file(capsys, tmp_path):
    p4 = tmp_path / "p4.edges"
    p4.write_text("n 4\n1 2\n2 3\n3 4\n")
    code, _, err = run(capsys, "stirling", "--graph", str(p4), "--method", "rook")
    assert code == 4 and "quasi-threshold" in err
    code, out, _ = run(capsys, "stirling", "--graph", str(p4), "--method", "auto")
    assert code == 0 and json.loads(out)["values"] == ["0", "0", "1", "3", "1"]
    code, out, _ = run(capsys, "stirling", "--graph", str(p4), "--method", "enumerate")
    assert json.loads(out)["values"] == ["0", "0", "1", "3", "1"]


def test_stirling_auto_matches_oracles(capsys, tmp_path):
    c5 = tmp_path / "c5.edges"
    c5.write_text("n 5\n1 2\n2 3\n3 4\n4 5\n1 5\n")
    outs = {m: json.loads(run(capsys, "stirling", "--graph", str(c5), "--method", m)[1])["values"]
            for m in ("auto", "enumerate", "chromatic")}
    assert outs["auto"] == outs["enumerate"] == outs["chromatic"]


def test_stirling_cap_and_input_errors(capsys, tmp_path):
    assert run(capsys, "stirling", "--family", "empty:20", "--method", "enumerate")[0] == 3
    assert run(capsys, "stirling", "--graph", str(tmp_path / "missing"), "--method", "auto")[0] == 2
    assert run(capsys, "stirling", "--family", "wheel:3")[0] == 2


def test_crosscheck(capsys):
    code, out, _ = run(capsys, "crosscheck", "--word", "xxDxxDxDDD")
    assert code == 0 and json.loads(out)["values"] == ["0", "0", "0", "2", "4", "1"]
    code, out, _ = run(capsys, "crosscheck", "--exhaustive", "6")
    assert code == 0 and json.loads(out)["instances"] == 1 + 2 + 5 + 14 + 42 + 132
    assert run(capsys, "crosscheck", "--random", "100", "--nmax", "10", "--seed", "7")[0] == 0
    assert run(capsys, "crosscheck", "--random", "5")[0] == 2


def test_normality_forest(capsys):
    code, out, _ = run(capsys, "normality", "--family", "forest", "--components", "2", "--sweep", "20")
    (row,) = json.loads(out)
    assert code == 0 and row["chi"] == 2 and row["g"] == "1/10"


def test_normality_complete_is_degenerate(capsys, caplog):
    code, out, _ = run(capsys, "normality", "--family", "complete", "--sweep", "10")
    (row,) = json.loads(out)
    assert code == 0 and row["degenerate"] and row["kolmogorov"] is None
    assert "degenerate" in caplog.text


def test_normality_csv_round_trip(capsys, tmp_path):
    path = tmp_path / "out.csv"
    code, out, _ = run(capsys, "normality", "--family", "empty", "--sweep", "50,20,100", "--csv", str(path))
    rows = json.loads(out)
    with open(path, newline="") as fh:
        table = list(csv.DictReader(fh))
    assert code == 0
    assert list(table[0]) == ["n", "f", "chi", "g", "mean", "variance", "kolmogorov", "real_rooted", "ratio"]
    assert [int(r["n"]) for r in table] == [20, 50, 100]
    for r, j in zip(table, rows):
        assert float(r["kolmogorov"]) == pytest.approx(j["kolmogorov"], rel=1e-9)
        num, den = map(int, j["variance"].split("/"))
        assert float(r["variance"]) == pytest.approx(num / den, rel=1e-9)
    ks = [float(r["kolmogorov"]) for r in table]
    assert ks == sorted(ks, reverse=True)


def test_normality_bad_sweep(capsys):
    assert run(capsys, "normality", "--family", "empty", "--sweep", "a,b")[0] == 2


def test_family(capsys):
    assert run(capsys, "family", "empty:3", "--emit", "word")[1].strip() == "xDxDxD"
    assert run(capsys, "family", "star:5", "--emit", "word")[1].strip() == "xxDxDxDxDD"
    code, out, _ = run(capsys, "family", "forest:6", "--components", "2", "--emit", "graph")
    g = read_graph(out)
    assert code == 0 and g.n_vertices == 6 and is_forest(g) and component_count(g) == 2
    assert run(capsys, "family", "forest:3", "--components", "9")[0] == 2


def test_deterministic(capsys):
    first = run(capsys, "family", "randomqt:15", "--seed", "42", "--emit", "word")[1]
    assert first == run(capsys, "family", "randomqt:15", "--seed", "42", "--emit", "word")[1]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "graphstirling.cli", "stirling", "--word", "xDxD"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["values"] == ["0", "1", "1"]
