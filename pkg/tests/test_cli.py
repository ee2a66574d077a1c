"""Command-line behavior: exit codes, output formats, determinism."""
from __future__ import annotations

import json

import pytest

from ringlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ------------------------------------------------------------------- build

def test_build_preset_writes_ring_file(tmp_path, capsys):
    out = tmp_path / "z4.json"
    code, stdout, _ = run(capsys, "build", "zmod:4", "-o", str(out))
    assert code == 0
    assert "order 4" in stdout
    obj = json.loads(out.read_text())
    assert obj["order"] == 4


def test_build_examples_match_expected_orders(tmp_path, capsys):
    for preset, order in [
        ("tri:2:zmod:2", 8),
        ("mat:2:zmod:3", 81),
        ("cdtri:2:zmod:3", 9),
        ("dorroh:zmod:2", 4),
        ("quot:delta:tri:2:zmod:2", 2),
    ]:
        out = tmp_path / "r.json"
        code, stdout, _ = run(capsys, "build", preset, "-o", str(out))
        assert code == 0
        assert f"order {order}" in stdout


def test_build_bad_preset_exits_2(tmp_path, capsys):
    code, _, stderr = run(capsys, "build", "zmod:zero", "-o", str(tmp_path / "x.json"))
    assert code == 2
    assert "error" in stderr


def test_build_size_cap_exits_2(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("RINGLAB_SIZE_CAP", "10")
    code, _, stderr = run(capsys, "build", "mat:2:zmod:2", "-o", str(tmp_path / "x.json"))
    assert code == 2
    assert "cap" in stderr


def test_build_from_spec_file(tmp_path, capsys):
    spec = {"preset": "tri:2:zmod:2", "name": "mytri"}
    spec_path = tmp_path / "spec.json"
    spec_path.write_text(json.dumps(spec))
    out = tmp_path / "ring.json"
    code, stdout, _ = run(capsys, "build", str(spec_path), "-o", str(out))
    assert code == 0
    assert json.loads(out.read_text())["name"] == "mytri"


def test_build_dorroh_spec_file(tmp_path, capsys):
    spec = {
        "kind": "dorroh",
        "base": {"preset": "zmod:2"},
        "bimodule": {"preset": "zmod:2"},
        "left_action": [[0, 0], [0, 1]],
        "right_action": [[0, 0], [0, 1]],
    }
    spec_path = tmp_path / "spec.json"
    spec_path.write_text(json.dumps(spec))
    out = tmp_path / "ring.json"
    code, stdout, _ = run(capsys, "build", str(spec_path), "-o", str(out))
    assert code == 0
    assert "order 4" in stdout


def test_build_dorroh_spec_rejects_bad_action(tmp_path, capsys):
    spec = {
        "kind": "dorroh",
        "base": {"preset": "zmod:2"},
        "bimodule": {"preset": "zmod:2"},
        "left_action": [[0, 0], [0, 0]],
        "right_action": [[0, 0], [0, 1]],
    }
    spec_path = tmp_path / "spec.json"
    spec_path.write_text(json.dumps(spec))
    code, _, stderr = run(capsys, "build", str(spec_path), "-o", str(tmp_path / "r.json"))
    assert code == 2


# ------------------------------------------------------------------ report

@pytest.fixture()
def z4_file(tmp_path, capsys):
    out = tmp_path / "z4.json"
    assert main(["build", "zmod:4", "-o", str(out)]) == 0
    capsys.readouterr()
    return out


def test_report_json(z4_file, capsys):
    code, stdout, _ = run(capsys, "report", str(z4_file))
    assert code == 0
    rep = json.loads(stdout)
    assert rep["delta"]["consensus"] == [0, 2]
    assert rep["properties"]["uniquely-clean"] is True


def test_report_text(z4_file, capsys):
    code, stdout, _ = run(capsys, "report", str(z4_file), "--format", "text")
    assert code == 0
    assert "delta" in stdout and "uniquely-clean" in stdout


def test_report_missing_file_exits_2(tmp_path, capsys):
    code, _, stderr = run(capsys, "report", str(tmp_path / "nope.json"))
    assert code == 2


def test_report_rejects_invalid_ring_file(tmp_path, capsys):
    bad = {"name": "bad", "order": 2, "zero": 0, "one": 1,
           "add": [[0, 1], [1, 0]], "mul": [[0, 0], [0, 0]]}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    code, _, stderr = run(capsys, "report", str(path))
    assert code == 2
    assert "error" in stderr


# ------------------------------------------------------------------- check

def test_check_ring_property_pass(z4_file, capsys):
    code, stdout, _ = run(capsys, "check", str(z4_file), "delta-quasipolar")
    assert code == 0
    assert json.loads(stdout)["holds"] is True


def test_check_ring_property_fail(tmp_path, capsys):
    out = tmp_path / "t2z3.json"
    assert main(["build", "tri:2:zmod:3", "-o", str(out)]) == 0
    capsys.readouterr()
    code, stdout, _ = run(capsys, "check", str(out), "delta-quasipolar")
    assert code == 1
    payload = json.loads(stdout)
    assert payload["holds"] is False
    assert payload["witness"] == 9


def test_check_element_certificate(z4_file, capsys):
    code, stdout, _ = run(
        capsys, "check", str(z4_file), "strongly-j-clean", "--element", "3"
    )
    assert code == 0
    cert = json.loads(stdout)
    assert cert["witnesses"] == {"e": 1, "w": 2}
    assert all(ok for _, ok in cert["checks"])


def test_check_element_refutation(z4_file, capsys):
    code, stdout, _ = run(
        capsys, "check", str(z4_file), "von-neumann-regular", "--element", "2"
    )
    assert code == 1
    assert json.loads(stdout)["holds"] is False


def test_check_usage_errors(z4_file, capsys):
    code, _, _ = run(capsys, "check", str(z4_file), "sparkly")
    assert code == 2
    code, _, _ = run(capsys, "check", str(z4_file), "boolean", "--element", "1")
    assert code == 2
    code, _, _ = run(capsys, "check", str(z4_file), "clean", "--element", "99")
    assert code == 2


# ------------------------------------------------------------------- delta

def test_delta_command(z4_file, capsys):
    code, stdout, _ = run(capsys, "delta", str(z4_file))
    assert code == 0
    payload = json.loads(stdout)
    assert payload["agree"] is True
    for key in ("r1", "r2", "r3", "r4", "r5"):
        assert payload[key] == [0, 2]


# ------------------------------------------------------------------ search

def test_search_found(capsys):
    code, stdout, _ = run(
        capsys, "search", "--hyp", "delta-quasipolar", "--concl", "j-quasipolar"
    )
    assert code == 0
    payload = json.loads(stdout)
    assert payload["found"] is True
    assert payload["ring"] == "Z3"


def test_search_none(capsys):
    code, stdout, _ = run(
        capsys, "search", "--hyp", "j-quasipolar", "--concl", "delta-quasipolar"
    )
    assert code == 1
    assert json.loads(stdout)["found"] is False


def test_search_bad_property_exits_2(capsys):
    code, _, _ = run(capsys, "search", "--hyp", "shiny", "--concl", "clean")
    assert code == 2


# ------------------------------------------------------------ verify-paper

def test_verify_paper_subprocess_exit_zero(verify_cli_run):
    proc, results = verify_cli_run
    assert proc.returncode == 0, proc.stderr
    assert results is not None
    statuses = {r["status"] for r in results}
    assert "violated" not in statuses


def test_verify_paper_text_table(capsys):
    code, stdout, _ = run(capsys, "verify-paper")
    assert code == 0
    assert "holds-on-catalog" in stdout
    assert "disputed-paper-claim" in stdout


def test_verify_paper_custom_catalog(tmp_path, capsys):
    manifest = {"entries": [{"name": "OnlyZ2", "preset": "zmod:2"}]}
    path = tmp_path / "cat.json"
    path.write_text(json.dumps(manifest))
    code, stdout, _ = run(
        capsys, "verify-paper", "--catalog", str(path), "--format", "json"
    )
    assert code == 0
    results = json.loads(stdout)
    # on a Z2-only catalog nothing is violated and nothing disputed fires
    assert {r["status"] for r in results} <= {"holds-on-catalog", "out-of-scope"}


def test_verify_paper_bad_catalog_exits_2(tmp_path, capsys):
    path = tmp_path / "cat.json"
    path.write_text("{not json")
    code, _, stderr = run(capsys, "verify-paper", "--catalog", str(path))
    assert code == 2


# ------------------------------------------------------------ determinism

def test_report_byte_identical_runs(tmp_path, capsys):
    out = tmp_path / "m2z2.json"
    assert main(["build", "mat:2:zmod:2", "-o", str(out)]) == 0
    capsys.readouterr()
    first = run(capsys, "report", str(out))
    second = run(capsys, "report", str(out))
    assert first == second
