import json

import pytest

from cointersect.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_gen_json_envelope(capsys):
    code, doc = run_json(capsys, "gen", "--family", "path", "--params", "4")
    assert code == 0
    assert doc["tool"] == "cointersect" and doc["version"]
    assert doc["config"]["family"] == "path"
    assert doc["result"]["graph"]["n"] == 4


def test_gen_text_roundtrip(tmp_path, capsys):
    code, out = run(capsys, "gen", "--family", "cycle", "--params", "5", "--format", "text")
    assert code == 0
    assert out.startswith("n 5\n")


def test_exact_k222(capsys):
    code, doc = run_json(capsys, "exact", "--family", "complete_multipartite",
                         "--parts", "2,2,2")
    assert code == 0
    assert doc["result"]["theta_c"] == 5


def test_exact_emits_cnf(tmp_path, capsys):
    cnf_dir = tmp_path / "cnfs"
    code, doc = run_json(capsys, "exact", "--family", "path", "--params", "4",
                         "--emit-cnf", str(cnf_dir))
    assert code == 0
    files = sorted(p.name for p in cnf_dir.iterdir())
    assert files and all(f.endswith(".cnf") for f in files)


def test_verify_constructed_pair(tmp_path, capsys):
    code, out = run(capsys, "gen", "--family", "star", "--params", "6", "--format", "text")
    (tmp_path / "g.txt").write_text(out)
    code, out = run(capsys, "construct", "--kind", "star", "--n", "6",
                    "--alpha", "2", "--beta", "3")
    (tmp_path / "r.json").write_text(out)
    code, doc = run_json(capsys, "verify", "--graph", str(tmp_path / "g.txt"),
                         "--cir", str(tmp_path / "r.json"))
    assert code == 0
    assert doc["result"]["valid"] is True


def test_verify_invalid_exits_one(tmp_path, capsys):
    (tmp_path / "g.txt").write_text("n 2\n0 1\n")
    (tmp_path / "r.json").write_text(
        '{"alpha":1,"beta":1,"vertices":[{"A":[],"B":[]},{"A":[],"B":[]}]}')
    code, doc = run_json(capsys, "verify", "--graph", str(tmp_path / "g.txt"),
                         "--cir", str(tmp_path / "r.json"))
    assert code == 1
    assert doc["result"]["violations"] == [[0, 1]]


def test_score_command(tmp_path, capsys):
    (tmp_path / "g.txt").write_text("n 2\n0 1\n")
    (tmp_path / "r.json").write_text(
        '{"alpha":1,"beta":1,"vertices":[{"A":[0],"B":[0]},{"A":[0],"B":[0]}]}')
    code, doc = run_json(capsys, "score", "--graph", str(tmp_path / "g.txt"),
                         "--cir", str(tmp_path / "r.json"))
    assert code == 0 and doc["result"] == {"matched": 1, "total": 1}


def test_synth_then_exact_within_budget(tmp_path, capsys):
    code, doc = run_json(capsys, "synth", "--n", "9", "--alpha", "4", "--beta", "5",
                         "--seed", "3")
    assert code == 0
    g = doc["result"]["graph"]
    text = "n {}\n".format(g["n"]) + "".join(f"{u} {v}\n" for u, v in g["edges"])
    (tmp_path / "g.txt").write_text(text)
    code, doc = run_json(capsys, "exact", "--graph", str(tmp_path / "g.txt"))
    assert code == 0
    assert doc["result"]["theta_c"] <= 9


def test_anneal_deterministic_bytes(capsys):
    args = ("anneal", "--family", "path", "--params", "8", "--alpha", "2",
            "--beta", "3", "--rounds", "300", "--seed", "5")
    _, out1 = run(capsys, *args)
    _, out2 = run(capsys, *args)
    assert out1 == out2


def test_anneal_rounds_and_b_conflict():
    with pytest.raises(SystemExit) as exc:
        main(["anneal", "--family", "path", "--params", "5", "--alpha", "1",
              "--beta", "2", "--rounds", "10", "--b", "3"])
    assert exc.value.code == 2


def test_bounds_command(capsys):
    code, doc = run_json(capsys, "bounds", "--family", "complete_bipartite",
                         "--params", "6,6")
    assert code == 0
    assert doc["result"]["theta1"] == {"value": 36, "exact": True}
    uppers = {u["name"]: u for u in doc["result"]["upper_candidates"]}
    assert uppers["bipartite_order"]["value"] == 12


def test_dnf_bound_command(capsys):
    code, doc = run_json(capsys, "dnf-bound", "--formula", "x1 | x2 & x3",
                         "--theta1", "5")
    assert code == 0
    assert doc["result"]["value"] == 5
    assert doc["result"]["witness"] == [1, 2, 2]


def test_packing_command(capsys):
    code, doc = run_json(capsys, "packing", "--kind", "affine", "--k", "3")
    assert code == 0
    assert len(doc["result"]["classes"]) == 4


def test_export_dimacs_raw(capsys):
    code, out = run(capsys, "export-dimacs", "--family", "complete", "--params", "2",
                    "--alpha", "1", "--beta", "1")
    assert code == 0
    assert "p cnf 6 8" in out


def test_oracle_command(capsys):
    code, doc = run_json(capsys, "oracle", "--family", "path", "--params", "4")
    assert code == 0
    assert doc["result"]["theta_c"] == 4


def test_align_command(tmp_path, capsys):
    a = '{"alpha":2,"beta":2,"vertices":[{"A":[0],"B":[0]},{"A":[1],"B":[1]}]}'
    b = '{"alpha":2,"beta":2,"vertices":[{"A":[1],"B":[1]},{"A":[0],"B":[0]}]}'
    (tmp_path / "a.json").write_text(a)
    (tmp_path / "b.json").write_text(b)
    code, doc = run_json(capsys, "align", "--reference", str(tmp_path / "a.json"),
                         "--candidate", str(tmp_path / "b.json"))
    assert code == 0
    assert doc["result"]["average_jaccard"] == 1.0


def test_communities_command(tmp_path, capsys):
    (tmp_path / "r.json").write_text(
        '{"alpha":1,"beta":1,"vertices":[{"A":[0],"B":[0]},{"A":[0],"B":[0]}]}')
    code, doc = run_json(capsys, "communities", "--cir", str(tmp_path / "r.json"))
    assert code == 0
    assert doc["result"]["a_communities"] == [[0, 1]]


def test_domain_error_exit_code_one(capsys, tmp_path):
    code = main(["gen", "--family", "nosuch"])
    assert code == 1
    code = main(["verify", "--graph", str(tmp_path / "missing.txt"), "--cir", "x"])
    assert code == 1


def test_usage_error_exit_code_two():
    with pytest.raises(SystemExit) as exc:
        main(["gen", "--unknown-flag"])
    assert exc.value.code == 2


def test_out_flag_writes_file(tmp_path, capsys):
    out_file = tmp_path / "g.json"
    code, out = run(capsys, "gen", "--family", "path", "--params", "3",
                    "--out", str(out_file))
    assert code == 0 and out == ""
    assert json.loads(out_file.read_text())["result"]["graph"]["n"] == 3
