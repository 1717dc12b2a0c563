"""End-to-end tests of the command-line interface."""

import json

import numpy as np
import pytest

from entsum.cli import main
from entsum.states import catalog_state, save_state


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_evaluate_catalog(capsys):
    code, out, _ = run(capsys, "evaluate", "--catalog", "GHZ3", "--kind", "vn")
    assert code == 0
    assert "E_VN = 3" in out


def test_evaluate_all_and_mixedness(capsys):
    code, out, _ = run(capsys, "evaluate", "--catalog", "BSSB5", "--all", "--mixedness", "2")
    assert code == 0
    for label in ("E_L = 10", "E_VN = 25", "E_N = 17.5", "Q = 1"):
        assert label in out
    assert "m=2: all_maximally_mixed=True" in out


def test_evaluate_per_bipartition_and_json(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(
        capsys, "evaluate", "--catalog", "GHZ3", "--kind", "linear",
        "--per-bipartition", "--json", str(target),
    )
    assert code == 0
    doc = json.loads(target.read_text())
    assert doc["kind"] == "linear"
    assert doc["total"] == pytest.approx(1.5)
    assert out.count("0.5") >= 3  # three bipartitions at 1/2 each


def test_evaluate_file_input(capsys, tmp_path):
    path = tmp_path / "w3.state"
    save_state(catalog_state("W3"), path)
    code, out, _ = run(capsys, "evaluate", "--file", str(path), "--kind", "neg")
    assert code == 0
    assert "qubits: 3" in out


def test_evaluate_unknown_catalog_exit_code(capsys):
    code, _, err = run(capsys, "evaluate", "--catalog", "NOPE")
    assert code == 2
    assert "error" in err


def test_evaluate_bad_file_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.state"
    bad.write_text("qubits=2 ordering=msb-first\ngarbage\n")
    code, _, err = run(capsys, "evaluate", "--file", str(bad))
    assert code == 2


def test_evaluate_mixedness_out_of_range_exit_code(capsys):
    code, _, _ = run(capsys, "evaluate", "--catalog", "GHZ3", "--mixedness", "3")
    assert code == 3


def test_bounds_table(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "3..7", "--check")
    assert code == 0
    assert out.count("PASS") == 20
    assert "FAIL" not in out


def test_bounds_single_n_no_reference(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "8", "--check")
    assert code == 0
    assert "skipped" in out


def test_bounds_invalid_n(capsys):
    code, _, _ = run(capsys, "bounds", "--n", "1")
    assert code == 4


def test_search_writes_outputs(capsys, tmp_path):
    code, out, _ = run(
        capsys, "search", "--n", "2", "--kind", "vn", "--seed", "0",
        "--out-dir", str(tmp_path),
    )
    assert code == 0
    for name in ("final.state", "trace.json", "convergence.csv", "search.manifest.json"):
        assert (tmp_path / name).exists(), name
    manifest = json.loads((tmp_path / "search.manifest.json").read_text())
    assert manifest["seed"] == 0
    assert manifest["config"]["n"] == 2
    trace = json.loads((tmp_path / "trace.json").read_text())
    assert trace["final_objective"] > 0.9999


def test_search_restarts_and_plot(capsys, tmp_path):
    code, out, _ = run(
        capsys, "search", "--n", "2", "--kind", "linear", "--seed", "3",
        "--restarts", "2", "--plot", "--out-dir", str(tmp_path),
    )
    assert code == 0
    restarts = json.loads((tmp_path / "restarts.json").read_text())
    assert [row["seed"] for row in restarts] == [3, 4]
    assert (tmp_path / "convergence.png").stat().st_size > 0


def test_search_brown_zero_start_rejected(capsys):
    code, _, err = run(
        capsys, "search", "--n", "3", "--move-rule", "brown", "--init", "zero",
    )
    assert code == 4


def test_sample_writes_outputs(capsys, tmp_path):
    code, out, _ = run(
        capsys, "sample", "--n", "2", "--samples", "400", "--bins", "20",
        "--seed", "1", "--markers", "GHZ2", "--plot", "--out-dir", str(tmp_path),
    )
    assert code == 0
    for name in ("histogram.csv", "histogram.json", "markers.csv",
                 "sample.manifest.json", "histogram.png"):
        assert (tmp_path / name).exists(), name
    assert "marker GHZ2 = 1" in out
    markers = (tmp_path / "markers.csv").read_text().splitlines()
    assert markers[0] == "name,value"
    assert markers[1].startswith("GHZ2,")


def test_sample_out_dir_env(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("ENTSUM_OUT_DIR", str(tmp_path / "envout"))
    code, _, _ = run(capsys, "sample", "--n", "2", "--samples", "100", "--bins", "5")
    assert code == 0
    assert (tmp_path / "envout" / "histogram.csv").exists()


def test_sample_bad_arity(capsys):
    code, _, _ = run(capsys, "sample", "--n", "9", "--samples", "10")
    assert code == 3


def test_verify_quick_reports_and_exits_nonzero(capsys):
    # The checklist intentionally carries published-value discrepancies,
    # so a fresh run reports failures and exits 1.
    code, out, _ = run(capsys, "verify", "--quick")
    assert code == 1
    assert "checks passed" in out
    assert "PASS" in out and "FAIL" in out


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
