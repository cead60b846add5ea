import json

from srinv.cli import main


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def pentagon_file(tmp_path):
    return write(tmp_path, "c5.txt", "graph n=5\n0 1\n1 2\n2 3\n3 4\n0 4\n")


def square_file(tmp_path):
    return write(tmp_path, "c4.json", json.dumps({"n": 4, "edges": [[0, 1], [1, 2], [2, 3], [0, 3]]}))


def triangle_complex_file(tmp_path):
    return write(tmp_path, "tri.txt", "complex n=3\n0 1\n0 2\n1 2\n")


def test_invariants_text_output(tmp_path, capsys):
    assert main(["invariants", "--graph", pentagon_file(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert "dim=1" in out
    assert "reg=2" in out
    assert "cm_type=1" in out


def test_invariants_json_output(tmp_path, capsys):
    assert main(["invariants", "--graph", pentagon_file(tmp_path), "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["dim"] == 1
    assert data["cm_type"] == 1
    assert data["a_invariant"] == 0


def test_invariants_from_complex_file(tmp_path, capsys):
    assert main(["invariants", "--complex", triangle_complex_file(tmp_path), "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["reg"] == 2
    assert data["cm_type"] == 1


def test_betti_text_output(tmp_path, capsys):
    assert main(["betti", "--graph", square_file(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert "pd=3" in out
    assert "beta[1,2]=4" in out


def test_betti_json_output(tmp_path, capsys):
    assert main(["betti", "--graph", square_file(tmp_path), "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    entries = {(e["i"], e["total_degree"]): e["value"] for e in data["entries"]}
    assert entries == {(0, 0): 1, (1, 2): 4, (2, 3): 4, (3, 4): 1}
    assert all(e["shift"] == e["total_degree"] - e["i"] for e in data["entries"])


def test_homology_json(tmp_path, capsys):
    assert main(["homology", "--complex", triangle_complex_file(tmp_path), "--char", "3"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["field_char"] == 3
    assert data["ranks"] == {"-1": 0, "0": 0, "1": 1}


def test_construct_writes_certificate(tmp_path, capsys):
    out_path = tmp_path / "cert.json"
    assert main(["construct", "4", "2", "2", "--out", str(out_path)]) == 0
    assert "claims met: yes" in capsys.readouterr().out
    cert = json.loads(out_path.read_text())
    assert cert["claims_met"] is True
    assert cert["input"] == {"d": 4, "r": 2, "t": 2}
    assert cert["invariants"]["reg"] == 2


def test_construct_rejects_bad_targets(capsys):
    assert main(["construct", "2", "1", "2"]) == 2
    assert "error:" in capsys.readouterr().err


def test_verify_prop41(capsys):
    assert main(["verify", "prop41", "--parts", "2,2"]) == 0
    out = capsys.readouterr().out
    assert "OK" in out
    assert "reg=2" in out


def test_verify_prop41_bad_parts(capsys):
    assert main(["verify", "prop41", "--parts", "2,0"]) == 2


def test_verify_prop44(tmp_path, capsys):
    path = write(tmp_path, "p4.txt", "graph n=4\n0 1\n0 2\n1 3\n")
    assert main(["verify", "prop44", "--graph", path]) == 0
    assert "OK" in capsys.readouterr().out


def test_verify_prop44_explicit_split(tmp_path, capsys):
    path = write(tmp_path, "p4.txt", "graph n=4\n0 2\n0 1\n2 3\n")
    # cover {0, 2} matched with {1, 3}
    assert main(["verify", "prop44", "--graph", path, "--cover", "0,2", "--independent", "1,3"]) == 0


def test_verify_prop44_rejects_bad_split(tmp_path, capsys):
    path = write(tmp_path, "c4.txt", "graph n=4\n0 1\n1 2\n2 3\n0 3\n")
    assert main(["verify", "prop44", "--graph", path]) == 2
    assert "error:" in capsys.readouterr().err


def test_sweep_ok(capsys):
    assert main(["sweep", "--max-n", "4"]) == 0
    out = capsys.readouterr().out
    assert "OK" in out
    assert "tested: 46" in out


def test_sweep_json_report(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    assert main(["sweep", "--max-n", "3", "--json", "--out", str(out_path)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["ok"] is True
    assert json.loads(out_path.read_text()) == data


def test_missing_file_is_an_input_error(capsys):
    assert main(["invariants", "--complex", "does-not-exist.txt"]) == 2
    assert "error:" in capsys.readouterr().err


def test_bad_field_characteristic(tmp_path, capsys):
    assert main(["homology", "--complex", triangle_complex_file(tmp_path), "--char", "4"]) == 2
