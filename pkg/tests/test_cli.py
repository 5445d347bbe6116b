import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from atkinlike import verify
from atkinlike.cli import run
from atkinlike.report import Report


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def schema():
    return json.loads(resources.files("atkinlike").joinpath("schema/verify_report.schema.json").read_text())


def test_atkin_poly_text(capsys):
    code, out, _ = call(capsys, "atkin-poly", "--r", "2", "--n", "1", "--format", "text")
    assert code == 0 and out.strip() == "X - 720"


def test_atkin_poly_latex_descends(capsys):
    code, out, _ = call(capsys, "atkin-poly", "--r", "2", "--n", "2", "--format", "latex")
    assert code == 0 and out.strip().startswith("X^{2} - 1640X")


def test_extremal_json(capsys):
    code, out, _ = call(capsys, "extremal", "--weight", "12", "--terms", "8", "--format", "json")
    assert code == 0
    assert json.loads(out)["coefficients"] == [0, 0, 1, 56, 1002, 9296, 57708, 269040]


def test_moments_json(capsys):
    code, out, _ = call(capsys, "moments", "--count", "3", "--format", "json")
    assert code == 0 and json.loads(out)["moments"] == [1, 720, 911520]


def test_inner_product(capsys):
    code, out, _ = call(capsys, "inner-product", "--f", "[-720, 1]", "--g", "[-720, 1]", "--format", "json")
    assert code == 0 and json.loads(out)["value"] == 393120


def test_omega_fraction_is_string(capsys):
    code, out, _ = call(capsys, "omega", "--k", "14", "--l", "1", "--count", "5", "--format", "json")
    assert code == 0
    assert json.loads(out)["values"] == [0, 0, 1, "1536/5", "1176672/5"]


def test_text_and_json_agree(capsys):
    _, text, _ = call(capsys, "faber", "--weight", "0", "--n", "2")
    _, js, _ = call(capsys, "faber", "--weight", "0", "--n", "2", "--format", "json")
    assert "X^2 - 1488*X + 159768" in text
    assert json.loads(js)["polynomial"]["coefficients"] == [159768, -1488, 1]


def test_congruence_command(capsys):
    code, out, _ = call(capsys, "congruence", "--prime", "13")
    assert code == 0 and "X + 8" in out


def test_cfrac(capsys):
    code, out, _ = call(capsys, "cfrac", "--depth", "2", "--format", "json")
    assert code == 0 and json.loads(out)["e"][:4] == [720, 546, 374, 475]


@pytest.mark.parametrize(
    "argv",
    [
        ["congruence", "--prime", "15"],
        ["congruence", "--prime", "3"],
        ["inner-product", "--f", "not json", "--g", "[1]"],
        ["inner-product", "--f", "[true]", "--g", "[1]"],
        ["extremal", "--weight", "4"],
        ["extremal", "--weight", "7"],
        ["verify", "--suite", "forms", "--precision", "4"],
    ],
)
def test_invalid_input_exits_2(capsys, argv):
    assert call(capsys, *argv)[0] == 2


@pytest.mark.parametrize("argv", [["moments", "--count", "0"], ["atkin-poly", "--r", "3", "--n", "1"], ["bogus"]])
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        run(argv)
    assert exc.value.code == 2
    capsys.readouterr()


def test_verify_failure_exits_1(capsys, monkeypatch):
    def failing():
        rep = Report("planted")
        rep.add("always false", False, "planted failure")
        return [("congruence", "planted", lambda o: rep)]

    monkeypatch.setitem(verify.GROUPS, "congruence", failing)
    code, out, _ = call(capsys, "verify", "--suite", "congruence", "--format", "json")
    assert code == 1 and json.loads(out)["counts"] == {"pass": 0, "fail": 1}


def test_verify_congruence_report(capsys):
    code, out, err = call(capsys, "verify", "--suite", "congruence", "--pmax", "97", "--format", "json")
    assert code == 0
    report = json.loads(out)
    jsonschema.validate(report, schema())
    assert report["passed"] and report["counts"]["fail"] == 0
    assert "[congruence]" in err


def test_verify_timing_optional(capsys):
    _, out, _ = call(capsys, "verify", "--suite", "congruence", "--pmax", "13", "--timing", "--format", "json")
    report = json.loads(out)
    jsonschema.validate(report, schema())
    assert all("seconds" in e for e in report["entries"])


def test_report_order_independent_of_jobs():
    opt = verify.Options(pmax=23)
    one = verify.run_suite("section6", opt, jobs=1)
    two = verify.run_suite("section6", opt, jobs=3)
    assert one == two
    ids = [e["id"] for e in one["entries"]]
    assert ids == sorted(ids)


def test_byte_identical_subprocess_runs():
    argv = [sys.executable, "-m", "atkinlike", "verify", "--suite", "section2", "--format", "json"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv + ["--jobs", "2"], capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["passed"]
