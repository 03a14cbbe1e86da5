"""CLI behavior: commands, formats, exit codes, and byte stability."""

import json
import subprocess
import sys

import pytest

from psasigma.cli import run

EXAMPLE = {
    "vertices": ["a", "b", "c", "d", "e"],
    "edges": [["a", "b"], ["b", "c"], ["c", "d"], ["c", "e"]],
}

ITEM2 = {
    "b:{d}": 1, "b:{e}": -1,
    "d:{a,b}": 2, "d:{e}": -2,
    "e:{a,b}": 3, "e:{d}": -3,
}


@pytest.fixture
def graph_file(tmp_path):
    path = tmp_path / "example.json"
    path.write_text(json.dumps(EXAMPLE))
    return str(path)


@pytest.fixture
def char_file(tmp_path):
    path = tmp_path / "chi.json"
    path.write_text(json.dumps(ITEM2))
    return str(path)


def test_pcs_json(graph_file, capsys):
    assert run(["pcs", "--graph", graph_file, "--format", "json"]) == 0
    out = capsys.readouterr().out
    assert out.endswith("\n")
    data = json.loads(out)
    assert len(data["partial_conjugations"]) == 8
    assert data["sphere_dimension"] == 7


def test_pcs_text(graph_file, capsys):
    assert run(["pcs", "--graph", graph_file]) == 0
    out = capsys.readouterr().out
    assert "a:{c,d,e}" in out
    assert "sphere dimension: 7" in out


def test_edgelist_input(tmp_path, capsys):
    path = tmp_path / "g.txt"
    path.write_text("a b\nb c\n")
    assert run(["pcs", "--graph", str(path), "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["partial_conjugations"] == ["a:{c}", "c:{a}"]


def test_output_byte_stable(graph_file, capsys):
    run(["psets", "--graph", graph_file, "--format", "json"])
    first = capsys.readouterr().out
    run(["psets", "--graph", graph_file, "--format", "json"])
    assert capsys.readouterr().out == first


def test_psets_json(graph_file, capsys):
    run(["psets", "--graph", graph_file, "--format", "json"])
    data = json.loads(capsys.readouterr().out)
    assert len(data["families"]) == 4


def test_delta_psets_json(graph_file, capsys):
    run(["delta-psets", "--graph", graph_file, "--format", "json"])
    data = json.loads(capsys.readouterr().out)
    assert len(data["families"]) == 1
    assert data["families"][0]["side1"] == ["b:{d}", "b:{e}"]


def test_classify_json(graph_file, char_file, capsys):
    assert run(["classify", "--graph", graph_file, "--character", char_file,
                "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["type"] == "II"
    assert data["membership"] == "complement"


def test_sigma_raag(graph_file, tmp_path, capsys):
    chi = tmp_path / "psi.json"
    chi.write_text(json.dumps({"a": 1}))
    run(["sigma-raag", "--graph", graph_file, "--character", str(chi),
         "--format", "json"])
    data = json.loads(capsys.readouterr().out)
    assert data["membership"] == "complement"


def test_theorem_b_report(graph_file, capsys):
    run(["theorem-b", "--graph", graph_file, "--format", "json"])
    data = json.loads(capsys.readouterr().out)
    assert data["is_raag"] is False
    assert data["counting"]["raag"]["holds"] is True
    assert data["counting"]["psa"]["holds"] is True


def test_counting_and_subspheres(graph_file, capsys):
    run(["counting", "--graph", graph_file, "--format", "json"])
    data = json.loads(capsys.readouterr().out)
    assert data["psa"]["lhs"] == 8
    run(["subspheres", "--graph", graph_file, "--format", "json"])
    data = json.loads(capsys.readouterr().out)
    assert len(data["missing"]) == 2
    assert len(data["psa_complement"]) == 5


def test_sils_text(graph_file, capsys):
    run(["sils", "--graph", graph_file])
    out = capsys.readouterr().out
    assert "(b, d)" in out


def test_pairs_command(graph_file, capsys):
    run(["pairs", "--graph", graph_file, "--format", "json"])
    data = json.loads(capsys.readouterr().out)
    assert len(data["pairs"]) == 25


def test_domain_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices": ["a", "a"], "edges": []}')
    assert run(["pcs", "--graph", str(bad)]) == 1
    assert "error:" in capsys.readouterr().err


def test_missing_file_exit_code(tmp_path, capsys):
    assert run(["pcs", "--graph", str(tmp_path / "nope.json")]) == 1


def test_usage_error_exit_code(capsys):
    assert run(["pcs"]) == 2
    assert run(["no-such-command"]) == 2


def test_version_flag(capsys):
    assert run(["--version"]) == 0
    assert "psasigma" in capsys.readouterr().out


def test_gen_corpus(capsys):
    run(["gen-corpus", "--budget", "10", "--format", "json"])
    lines = capsys.readouterr().out.strip().split("\n")
    assert len(lines) == 10
    assert json.loads(lines[0])["vertices"] == ["v1"]


def test_selftest_small(capsys):
    assert run(["selftest", "--budget", "14"]) == 0
    assert "result: ok" in capsys.readouterr().out


def test_module_invocation(graph_file):
    proc = subprocess.run(
        [sys.executable, "-m", "psasigma", "pcs", "--graph", graph_file,
         "--format", "json"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["sphere_dimension"] == 7


def test_console_script_help():
    proc = subprocess.run(
        [sys.executable, "-m", "psasigma", "--help"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert "theorem-b" in proc.stdout


def test_text_truncates_long_domains(capsys):
    names = [f"x{i:02d}" for i in range(20)] + ["hub"]
    edges = [[f"x{i:02d}", f"x{j:02d}"] for i in range(20) for j in range(i + 1, 20)]
    import json as _json
    import tempfile
    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
        _json.dump({"vertices": sorted(names), "edges": edges}, fh)
        path = fh.name
    run(["pcs", "--graph", path])
    out = capsys.readouterr().out
    assert "..." in out
    run(["pcs", "--graph", path, "--format", "json"])
    assert "..." not in capsys.readouterr().out
