import json
import subprocess
import sys

import pytest

from gpfusion.cli import main
from gpfusion.report import Report, canonical, dumps
from gpfusion.partitions import Partition
from gpfusion.qpoly import Q, QPoly


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out), out


def test_kostka_charge(capsys):
    code, data, _ = run_json(capsys, "kostka", "--lambda", "2,1", "--mu", "1,1,1", "--method", "charge")
    assert code == 0
    assert data["results"]["charge"] == {"K": {"1": "1", "2": "1"}, "K_tilde": {"1": "1", "2": "1"}}


def test_kostka_hook_by_row(capsys):
    code, data, _ = run_json(capsys, "kostka", "--mu-row", "3", "--method", "hook")
    assert code == 0
    assert data["results"]["hook"]["K"] == {"3": "1"}


def test_kostka_all_methods_agree(capsys):
    code, data, _ = run_json(capsys, "kostka", "--lambda", "2,1", "--mu", "2,1")
    assert code == 0
    assert data["results"]["charge"]["K"] == {"0": "1"}
    assert data["checks"] == {"methods_agree": True}
    code, data, _ = run_json(capsys, "kostka", "--lambda", "2,1")
    assert set(data["results"]) == {"hook", "charge", "ring"}
    assert data["checks"]["methods_agree"]


def test_ring(capsys):
    code, data, _ = run_json(capsys, "ring", "--mu", "2,1", "--points", "1,2")
    assert code == 0
    assert data["results"]["hilbert"] == {"0": "1", "1": "2"}
    assert data["results"]["decomposition"] == {"3": {"0": "1"}, "2,1": {"1": "1"}}
    assert data["results"]["amu_dims"] == ["1", "2"]
    assert data["checks"] == {"kostka_match": True, "fstar_match": True}


def test_fusion(capsys):
    code, data, _ = run_json(capsys, "fusion", "--mu", "1,1", "--n", "2")
    assert code == 0
    assert data["results"]["decomposition"] == {"2": {"0": "1"}, "1,1": {"1": "1"}}
    assert data["results"]["dims_per_degree"] == ["3", "1"]
    assert data["checks"] == {"kostka_match": True, "z_independence": True}


def test_wedge(capsys):
    code, data, _ = run_json(capsys, "wedge", "--N", "3", "--n", "2")
    assert code == 0
    assert data["results"]["character_route"]["2,1"] == {"-2": "1", "-1": "1"}
    assert all(data["checks"].values())


def test_winf(capsys):
    code, data, _ = run_json(capsys, "winf", "--mu", "", "--n", "2", "--depth", "5")
    assert code == 0
    series = data["results"]["winf_char"]
    assert series["order"] == "5"
    assert series["coefficients"] == {"0": "1", "2": "1", "3": "1", "4": "2", "5": "2"}
    code, data, _ = run_json(capsys, "winf", "--mu", "1", "--n", "2", "--i", "1", "--depth", "4", "--mmax", "8")
    assert code == 0 and data["checks"] == {"stabilized": True, "matches_winf": True}


def test_chartable(capsys):
    code, data, _ = run_json(capsys, "chartable", "--N", "3")
    assert code == 0
    assert data["results"]["characters"]["2,1"] == ["-1", "0", "2"]


def test_text_output(capsys):
    code, out, _ = run(capsys, "ring", "--mu", "2,1")
    assert code == 0
    assert "hilbert: 1 + 2*q" in out
    assert "[PASS] kostka_match" in out


@pytest.mark.parametrize("argv", [
    ["kostka", "--lambda", "2,1", "--mu", "2,2"],
    ["kostka", "--lambda", "2,1", "--mu", "2,1", "--method", "hook"],
    ["kostka", "--lambda", "2,1", "--method", "bogus"],
    ["ring", "--mu", "1,2"],
    ["ring", "--mu", "2,1", "--points", "3,3"],
    ["ring", "--mu", "2,1", "--points", "1"],
    ["fusion", "--mu", "1,0", "--n", "2"],
    ["fusion", "--mu", "1,1", "--n", "2", "--points", "x"],
    ["winf", "--mu", "1,1,1", "--n", "2"],
    ["wedge", "--N", "2"],
    ["verify", "--level", "huge"],
    [],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_verify_quick_passes(capsys):
    code, out, _ = run(capsys, "verify", "--level", "quick")
    assert code == 0
    assert out.count("[PASS]") == 9


def test_verify_corrupt_fails_with_degree(capsys):
    code, out, _ = run(capsys, "verify", "--corrupt", "--only", "2")
    assert code == 1
    assert "[FAIL] 2-gp-theorem" in out
    assert "offending degree 2" in out
    assert "rmu_decompose" in out and "(2, 1)" in out


def test_json_is_canonical(capsys):
    for argv in (["ring", "--mu", "2,1"], ["fusion", "--mu", "2,1", "--n", "2"], ["wedge", "--N", "2", "--n", "2"]):
        _, data, raw = run_json(capsys, *argv)
        assert dumps(data) == raw


def test_report_round_trip():
    rep = Report("x", {"mu": Partition((2, 1))}, {"k": Q + Q**2, "n": 3, "nested": {Partition((1,)): QPoly()}},
                 {"ok": True}, 0.5)
    text = rep.to_json()
    assert dumps(json.loads(text)) == text
    assert json.loads(text)["results"]["k"] == {"1": "1", "2": "1"}
    assert not Report("y", {}, {}, {"a": True, "b": False}).ok
    with pytest.raises(TypeError):
        canonical(object())


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gpfusion", "kostka", "--lambda", "2,1", "--mu", "2,1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "methods_agree" in proc.stdout
