"""Command-line interface: output formats, determinism, exit codes."""

import contextlib
import io
import json
import os

import pytest

from vflie.cli import main


def run_cli(argv):
    buf = io.StringIO()
    err = io.StringIO()
    with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, buf.getvalue(), err.getvalue()


def test_phi_json():
    code, out, _ = run_cli(["phi", "--r", "2", "--lam", "0,0", "--mu", "0,0"])
    assert code == 0
    payload = json.loads(out)
    assert payload["poly"] == "N^4 + N^3"
    assert payload["coeffs"] == ["0", "0", "0", "1", "1"]


def test_phi_text_format():
    code, out, _ = run_cli(["phi", "--r", "1", "--lam", "1/2", "--mu", "3", "--format", "text"])
    assert code == 0
    assert out == "N + 4\n"


def test_shift_certificate():
    code, out, _ = run_cli(["shift", "--r", "1", "--lam", "0", "--mu", "0", "--cutoff", "6"])
    assert code == 0
    payload = json.loads(out)
    assert payload["N"] == [1]
    assert payload["verdict"] is True
    assert [w["weight"] for w in payload["weights"]] == list(range(7))


def test_span_certificate():
    code, out, _ = run_cli(["span", "--r", "2", "--lam", "0,0", "--mu", "0,0", "--cutoff", "8"])
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] is True
    assert payload["d"] == 1
    assert [0, 0] in payload["generators"]


def test_span_dilated():
    code, out, _ = run_cli(
        ["span", "--r", "1", "--lam", "0", "--mu", "0", "--d", "2", "--cutoff", "8"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["d"] == 2
    assert payload["generators"] == [[0], [1], [2]]


def test_hilbert_pipeline():
    code, out, _ = run_cli(["hilbert", "--r", "2", "--lam", "0,0", "--mu", "0,0", "--cutoff", "10"])
    assert code == 0
    payload = json.loads(out)
    assert payload["series"] == {"num": [1], "den": [1, -2, 1]}
    assert payload["dims_match"] is True
    assert payload["partial_sum"]["degree"] == 2
    assert payload["partial_sum"]["normalized_leading"] == 1


def test_homology_csv():
    code, out, _ = run_cli(
        ["homology", "--algebra", "L1:1", "--p-max", "2", "--w-max", "10", "--format", "csv"]
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "p\\w,0,1,2,3,4,5,6,7,8,9,10"
    assert lines[1].startswith("0,1,0")
    assert lines[2] == "1,0,1,1,0,0,0,0,0,0,0,0"
    assert lines[3] == "2,0,0,0,0,0,1,0,1,0,0,0"


def test_homology_json_tensor_coefficients():
    code, out, _ = run_cli(
        ["homology", "--algebra", "L1:1", "--lam", "1", "--mu", "0", "--p-max", "1", "--w-max", "4"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["algebra"] == "L1:1"
    assert {"p": 1, "w": 2, "dim": 1} in payload["nonzero"]


def test_weights_json():
    code, out, _ = run_cli(["weights", "--lam", "2,1"])
    assert code == 0
    payload = json.loads(out)
    assert payload["total_dim"] == 2
    assert {"alpha": [2, 1], "mult": 1} in payload["weights"]


def test_specht_subcommand(tmp_path):
    path = tmp_path / "gens.json"
    path.write_text(json.dumps([{"1,1": "1"}]))
    code, out, _ = run_cli(["specht", "--generators", str(path), "--cutoff", "10"])
    assert code == 0
    payload = json.loads(out)
    assert payload["dims"] == [0, 0, 1, 1, 2, 2, 3, 3, 4, 4, 5]
    assert payload["series"] == {"num": [0, 0, 1], "den": [1, -1, -1, 1]}


def test_byte_determinism(tmp_path):
    argv = ["span", "--r", "2", "--lam", "0,0", "--mu", "0,0", "--cutoff", "6"]
    first = run_cli(argv)
    second = run_cli(argv)
    assert first == second
    out_path = tmp_path / "cert.json"
    code, _, _ = run_cli(argv + ["--output", str(out_path)])
    assert code == 0
    assert out_path.read_text() == first[1]


def test_usage_errors_exit_64():
    assert run_cli(["phi", "--r", "2", "--lam", "0", "--mu", "0,0"])[0] == 64
    assert run_cli(["nonsense"])[0] == 64
    assert run_cli(["homology", "--algebra", "Q:1"])[0] == 64
    assert run_cli(["weights", "--lam", "1,2"])[0] == 64
    assert run_cli(["specht", "--generators", "/does/not/exist.json"])[0] == 64


def test_limit_exit_2():
    code, _, err = run_cli(
        ["phi", "--r", "9", "--lam", ",".join(["0"] * 9), "--mu", ",".join(["0"] * 9)]
    )
    assert code == 2
    assert "limit" in err
    code, _, _ = run_cli(
        ["homology", "--algebra", "L1:1", "--p-max", "2", "--w-max", "9", "--dim-limit", "3"]
    )
    assert code == 2
