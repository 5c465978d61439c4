import json
import os
import subprocess

import pytest

CLI = os.environ.get("QNB_CLI")
pytestmark = pytest.mark.skipif(not CLI, reason="QNB_CLI not set")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def offsets(scheme, site=0):
    return scheme["sites"][site]["offset_interval"]


def test_zoo_then_analyze(tmp_path):
    path = tmp_path / "j2.json"
    assert run("zoo", "jk", "--k", "2", "--ring", "8", "--out", str(path)).returncode == 0
    done = run("analyze", str(path))
    assert done.returncode == 0
    report = json.loads(done.stdout)
    assert offsets(report["in"]) == [0, 1]
    assert offsets(report["inverse_in"]) == [-2, -1]
    assert offsets(report["quantum_in"]) == [0, 2]


def test_analysis_is_identical_across_map_formats(tmp_path):
    reports = []
    for fmt in ("explicit", "rule"):
        path = tmp_path / f"t_{fmt}.json"
        assert run("zoo", "toffoli", "--ring", "7", "--format", fmt, "--out", str(path)).returncode == 0
        reports.append(run("analyze", str(path)).stdout)
    assert reports[0] == reports[1]


def test_identity_schemes(tmp_path):
    path = tmp_path / "id.json"
    path.write_text(json.dumps({
        "domain": [["a", 2], ["b", 3]],
        "codomain": [["a", 2], ["b", 3]],
        "kind": "explicit",
        "table": list(range(6)),
    }))
    report = json.loads(run("analyze", str(path)).stdout)
    for key in ("in", "out", "inverse_in", "inverse_out", "quantum_in"):
        members = [entry["members"] for entry in report[key]["sites"]]
        assert members == [["a"], ["b"]]


def test_verdicts_set_the_exit_status(tmp_path):
    path = tmp_path / "t.json"
    run("zoo", "toffoli", "--ring", "6", "--out", str(path))
    assert run("bounds", str(path)).returncode == 0
    assert run("duality", str(path)).returncode == 0
    assert run("compose", str(path), str(path)).returncode == 0
    # No pair reaches cell 0 alone from cell 2.
    assert run("signal", str(path), "--alice", "2", "--bob", "0").returncode == 1


def test_parse_errors(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"domain": [["a", 2]], "codomain": [["a", 2]], "kind": "explicit"}')
    done = run("analyze", str(path))
    assert done.returncode == 2
    assert "ParseError" in done.stderr and "table" in done.stderr


def test_verify_suite_summary():
    done = run("verify-suite", "--seed", "7")
    report = json.loads(done.stdout)
    assert report["seed"] == 7
    assert len(report["criteria"]) == 9
    assert done.returncode == (0 if report["failed"] == 0 else 1)
