import json

import pytest

from koutgraph.cli import main


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def kv(text: str) -> dict:
    return dict(line.split("=", 1) for line in text.splitlines() if "=" in line)


def body_lines(path) -> list[str]:
    return [ln for ln in path.read_text().splitlines() if not ln.startswith("#")]


def test_generate_triangle(tmp_path, capsys):
    out = tmp_path / "g.txt"
    code, text, _ = run(capsys, "generate", "--n", 3, "--k", 2, "--seed", 1, "--out", out)
    assert code == 0
    assert body_lines(out) == ["0 1", "0 2", "1 2"]
    assert kv(text)["edges"] == "3"


def test_generate_single_edge(tmp_path, capsys):
    out = tmp_path / "g.txt"
    assert run(capsys, "generate", "--n", 2, "--k", 1, "--seed", 5, "--out", out)[0] == 0
    assert body_lines(out) == ["0 1"]


def test_generate_is_reproducible(tmp_path, capsys):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    for p in (a, b):
        run(capsys, "generate", "--n", 200, "--k", 2, "--seed", 9, "--delete", 30, "--out", p)
    assert a.read_text() == b.read_text()
    head = [ln for ln in a.read_text().splitlines() if ln.startswith("#")]
    assert "# gamma=30" in head
    assert any(ln.startswith("# deleted=") for ln in head)


def test_generate_then_analyze_connected(tmp_path, capsys):
    g = tmp_path / "g.txt"
    run(capsys, "generate", "--n", 300, "--k", 3, "--seed", 2, "--out", g)
    code, text, _ = run(capsys, "analyze", "--in", g)
    assert code == 0
    info = kv(text)
    assert info["connected"] == "true"
    assert info["n"] == "300" and info["outside"] == "0"


def test_analyze_two_disjoint_edges(tmp_path, capsys):
    g = tmp_path / "g.txt"
    g.write_text("0 1\n2 3\n")
    code, text, _ = run(capsys, "analyze", "--in", g, "--json")
    assert code == 0
    info = json.loads(text)
    assert info["connected"] is False
    assert info["giant_size"] == 2
    assert info["outside"] == 2


def test_analyze_with_r(tmp_path, capsys):
    tri = tmp_path / "tri.txt"
    tri.write_text("0 1\n0 2\n1 2\n")
    info = kv(run(capsys, "analyze", "--in", tri, "--r", 1)[1])
    assert info["robust"] == "true"
    k4 = tmp_path / "k4.txt"
    k4.write_text("".join(f"{u} {v}\n" for u in range(4) for v in range(u + 1, 4)))
    info = kv(run(capsys, "analyze", "--in", k4, "--r", 2)[1])
    assert info["robust"] == "true"
    assert info["vertex_connectivity"] == "3"


def test_analyze_capacity_error(tmp_path, capsys):
    g = tmp_path / "g.txt"
    run(capsys, "generate", "--n", 20, "--k", 2, "--seed", 1, "--out", g)
    code, _, err = run(capsys, "analyze", "--in", g, "--r", 2)
    assert code == 3
    assert "n <= 16" in err


def test_analyze_format_and_io_errors(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("0 1\n2 2\n")
    code, _, err = run(capsys, "analyze", "--in", bad)
    assert code == 4
    assert "line 2" in err
    assert run(capsys, "analyze", "--in", tmp_path / "missing.txt")[0] == 4


def test_robustness_command(tmp_path, capsys):
    g = tmp_path / "g.txt"
    g.write_text("0 1\n2 3\n")
    code, text, _ = run(capsys, "robustness", "--in", g, "--r", 1, "--method", "enumerate")
    assert code == 0
    info = kv(text)
    assert info["robust"] == "false"
    assert info["max_robustness"] == "0"
    assert (info["witness_1"], info["witness_2"]) == ("0 1", "2 3")


def test_thresholds(capsys):
    code, text, _ = run(capsys, "thresholds", "--theorem", "t1", "--alpha", 0.5, "--n", 5000, "--json")
    assert code == 0
    assert json.loads(text)["value"] == pytest.approx(7.138426281507961, abs=1e-9)
    assert kv(run(capsys, "thresholds", "--theorem", "t2a")[1])["value"] == "2"
    assert kv(run(capsys, "thresholds", "--theorem", "robust", "--r", 3)[1])["value"] == "6"
    info = json.loads(run(capsys, "thresholds", "--theorem", "t2b", "--gamma", 1000, "--json")[1])
    assert round(info["value"], 2) == 5.79
    assert round(info["value_plus_one"], 2) == 6.79
    info = json.loads(run(capsys, "thresholds", "--theorem", "t4", "--alpha", 0.5, "--n", 5000,
                          "--lambda", 500, "--json")[1])
    assert info["value"] == pytest.approx(3.9731, abs=1e-4)


def test_thresholds_missing_params(capsys):
    code, _, err = run(capsys, "thresholds", "--theorem", "t1", "--n", 100)
    assert code == 2
    assert "alpha" in err
    assert run(capsys, "thresholds", "--theorem", "t1", "--n", 100, "--alpha", 2.0)[0] == 2


def test_bound_cut(capsys):
    code, text, _ = run(capsys, "bound", "cut", "--n", 6, "--k", 2, "--gamma", 2, "--lambda", 1,
                        "--terms")
    assert code == 0
    info = kv(text)
    assert float(info["total"]) == pytest.approx(0.135, rel=1e-12)
    assert float(info["term[1]"]) == pytest.approx(0.0864, rel=1e-12)
    info = json.loads(run(capsys, "bound", "cut", "--n", 5, "--k", 2, "--gamma", 0,
                          "--lambda", 2, "--json")[1])
    assert info["total"] == 0.0


def test_bound_robust(capsys):
    info = kv(run(capsys, "bound", "robust-term", "--n", 20, "--m", 1, "--k", 4, "--r", 2)[1])
    assert float(info["total"]) == 0.0
    info = json.loads(run(capsys, "bound", "robust-sum", "--n", 20, "--k", 4, "--r", 2,
                          "--terms", "--json")[1])
    assert len(info["terms"]) == 10
    assert run(capsys, "bound", "robust-term", "--n", 20, "--m", 3, "--k", 2, "--r", 2)[0] == 2


def test_experiment_flags_and_rerun(tmp_path, capsys):
    args = ["experiment", "--kind", "connectivity", "--n", 400, "--k-min", 1, "--k-max", 5,
            "--trials", 20, "--alpha", 0.5, "--seed", 3, "--trials-csv"]
    code, text, _ = run(capsys, *args, "--out-dir", tmp_path / "a")
    assert code == 0
    assert text.splitlines()[0].startswith("n,k,gamma,trials,p_connected")
    agg = (tmp_path / "a" / "aggregate.csv").read_text().splitlines()
    assert len(agg) == 1 + 5
    assert len((tmp_path / "a" / "trials.csv").read_text().splitlines()) == 1 + 100
    run(capsys, *args, "--threads", 3, "--out-dir", tmp_path / "b")
    for name in ("aggregate.csv", "trials.csv"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


def test_experiment_from_config(tmp_path, capsys):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"kind": "er-compare", "n": 200, "k_range": [2, 3], "trials": 5,
                               "master_seed": 1, "gamma": 20}))
    code, text, _ = run(capsys, "experiment", "--config", cfg, "--out-dir", tmp_path / "o")
    assert code == 0
    assert (tmp_path / "o" / "aggregate_er.csv").exists()
    assert "# er" in text


def test_experiment_robust_sample(tmp_path, capsys):
    code, text, _ = run(capsys, "experiment", "--kind", "robust-sample", "--n", 10, "--k-min", 2,
                        "--k-max", 3, "--trials", 10, "--r", 2, "--out-dir", tmp_path)
    assert code == 0
    assert text.splitlines()[0] == "n,k,r,trials,fraction_r_robust,fraction_r_connected"


def test_experiment_errors(tmp_path, capsys):
    assert run(capsys, "experiment", "--kind", "giant", "--out-dir", tmp_path)[0] == 2
    assert run(capsys, "experiment", "--kind", "robust-sample", "--n", 20, "--k-min", 2,
               "--k-max", 2, "--trials", 1, "--out-dir", tmp_path)[0] == 3
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "experiment", "--config", bad, "--out-dir", tmp_path)[0] == 4
    bad.write_text(json.dumps({"kind": "giant", "n": 10, "bogus": 1}))
    assert run(capsys, "experiment", "--config", bad, "--out-dir", tmp_path)[0] == 2
    assert run(capsys, "experiment", "--config", tmp_path / "nope.json",
               "--out-dir", tmp_path)[0] == 4


def test_generate_bad_parameters(tmp_path, capsys):
    assert run(capsys, "generate", "--n", 3, "--k", 3, "--seed", 0, "--out", tmp_path / "x")[0] == 2
    assert run(capsys, "generate", "--n", 3, "--k", 1, "--seed", 0, "--delete", 3,
               "--out", tmp_path / "x")[0] == 2
