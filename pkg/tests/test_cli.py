import csv
import io
import json
import math
import subprocess
import sys

import pytest

from landen_quartic.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--no-timestamp")
    return code, json.loads(out)


def test_quartic_closed_exact(capsys):
    code, rep = run_json(capsys, "quartic", "--a", "1", "--m", "0")
    assert code == 0
    assert rep["schemaVersion"] == 1
    assert rep["value"] == "1/4·π"


def test_quartic_float_flag(capsys):
    _, rep = run_json(capsys, "quartic", "--a", "1", "--m", "1", "--float")
    assert rep["value"] == pytest.approx(5 * math.pi / 32, rel=1e-15)


@pytest.mark.parametrize("method", ["closed", "hyper", "landen", "quadrature"])
def test_quartic_methods_agree(capsys, method):
    _, rep = run_json(capsys, "quartic", "--a", "1", "--m", "0", "--method", method, "--float")
    assert rep["value"] == pytest.approx(math.pi / 4, rel=1e-10)


def test_quartic_reports_P5(capsys):
    _, rep = run_json(capsys, "quartic", "--a", "0.5", "--m", "5")
    assert rep["details"]["P"] == ["4389/256", "8589/128", "7161/64", "777/8", "693/16", "63/8"]


def test_quartic_domain_error_exit_2(capsys):
    code, _, err = run(capsys, "quartic", "--a", "-1", "--m", "2")
    assert code == 2 and "a > -1" in err


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["quartic", "--m", "2"])
    assert exc.value.code == 2


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--m-max", "5", "--format", "csv", "--no-timestamp")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    row5 = [r["d"] for r in rows if r["m"] == "5"]
    assert row5 == ["4389/256", "8589/128", "7161/64", "777/8", "693/16", "63/8"]


def test_table_m0(capsys):
    _, rep = run_json(capsys, "table", "--m-max", "0")
    assert rep["table"] == [{"m": 0, "l": 0, "d": "1"}]


def test_table_m12_positive(capsys):
    from fractions import Fraction

    from landen_quartic.exact import d_coeff_oracle

    _, rep = run_json(capsys, "table", "--m-max", "12")
    for row in rep["table"]:
        d = Fraction(row["d"])
        assert d > 0 and d == d_coeff_oracle(row["m"], row["l"])


def test_landen_quad2(capsys):
    _, rep = run_json(capsys, "landen", "--variant", "quad2", "1", "1", "1", "--tol", "1e-12")
    assert rep["value"] == pytest.approx(2 * math.pi / math.sqrt(3), abs=1e-12)
    assert 2.7 <= rep["trace"]["estimatedOrder"] <= 3.3


def test_landen_agm(capsys):
    _, rep = run_json(capsys, "landen", "--variant", "agm", "1", "1")
    assert rep["value"] == 1 and rep["trace"]["iterations"] == 0


def test_landen_deg6(capsys):
    _, rep = run_json(capsys, "landen", "--variant", "deg6", "3", "3", "1", "2", "1")
    assert rep["value"] == pytest.approx(math.pi / 2, rel=1e-15)
    assert rep["inputs"]["printedDMap"] is False


def test_landen_wrong_arity(capsys):
    code, _, err = run(capsys, "landen", "--variant", "agm", "1", "2", "3")
    assert code == 2 and "takes 2" in err


def test_transform_quartic(capsys):
    _, rep = run_json(capsys, "transform", "--a", "1", "--m", "1")
    assert rep["value"] == "(1/8 + (1/2)*y^2) / (1 + 2*y^2 + y^4)"


def test_transform_explicit(capsys):
    _, rep = run_json(capsys, "transform", "--num", "1", "--den", "1,0,1")
    assert rep["value"] == "(1) / (1 + y^2)"
    code, _, _ = run(capsys, "transform", "--num", "1", "--den", "1,1,1")
    assert code == 2  # not even
    _, rep = run_json(capsys, "transform", "--num", "1", "--den", "1,1,1", "--general")
    assert "/" in rep["value"]


def test_verify_landen_symbolic(capsys):
    code, rep = run_json(capsys, "verify", "--suite", "landen-symbolic")
    assert code == 0 and rep["passed"] is True
    assert any("Q1" in c["name"] for c in rep["checks"])


def test_verify_failure_exit_1(capsys, monkeypatch):
    from landen_quartic import verify

    monkeypatch.setitem(verify.SUITES, "identities", lambda: [verify.Check("forced", False, 1.0)])
    code, out, _ = run(capsys, "verify", "--suite", "identities", "--format", "csv", "--no-timestamp")
    assert code == 1
    assert "check,forced,fail,1.0" in out


def test_deterministic_output(capsys):
    args = ("landen", "--variant", "quad2", "2", "1", "3", "--format", "csv", "--no-timestamp")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_timestamp_present_by_default(capsys):
    _, out, _ = run(capsys, "quartic", "--a", "1", "--m", "0")
    assert "timestamp" in json.loads(out)


def test_csv_is_rfc4180(capsys):
    _, out, _ = run(capsys, "landen", "--variant", "quad2", "1", "1", "1", "--format", "csv", "--no-timestamp")
    assert out.endswith("\r\n")
    rows = list(csv.reader(io.StringIO(out)))
    assert all(len(r) == 4 for r in rows)
    assert ["input", "params", "[1.0, 1.0, 1.0]", ""] in rows


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "landen_quartic", "quartic", "--a", "1", "--m", "2", "--no-timestamp"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["value"].endswith("·π")
