from __future__ import annotations

import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

import jsonschema
import pytest

from padic_hyper.cli import main
from padic_hyper.registry import CaseResult, Verdict
from padic_hyper.report import CSV_COLUMNS, ReportRecord, load_schema


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_gamma(capsys):
    assert run(capsys, "eval", "--gamma", "--alpha", "1", "--p", "11", "--prec", "2") == (0, "120\n", "")


def test_eval_series(capsys):
    code, out, _ = run(
        capsys, "eval", "--series", "2F1", "--upper", "1/2,1/2", "--lower", "1", "--z", "1",
        "--trunc", "p-1", "--p", "5", "--prec", "2",
    )
    assert (code, out) == (0, "1\n")
    code, out, _ = run(
        capsys, "eval", "--series", "2F1", "--upper", "-2,-2", "--lower", "1", "--z", "1",
        "--trunc", "2", "--p", "101", "--prec", "2",
    )
    assert (code, out) == (0, "6\n")


def test_eval_reports_negative_valuation(capsys):
    code, out, _ = run(
        capsys, "eval", "--series", "3F2", "--upper", "1,1,1", "--lower", "3/2,3/2", "--z", "-1",
        "--trunc", "p-1", "--p", "5",
    )
    assert code == 0 and "valuation=-2" in out


def test_eval_errors(capsys):
    code, _, err = run(capsys, "eval", "--gamma", "--alpha", "1/5", "--p", "5")
    assert code == 1 and "NotPIntegral" in err
    code, _, _ = run(capsys, "eval", "--series", "2F1", "--upper", "1/2", "--lower", "1", "--z", "1", "--p", "5")
    assert code == 2
    code, _, _ = run(capsys, "eval", "--gamma", "--alpha", "1", "--p", "9")
    assert code == 1


def test_unknown_theorem_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "--theorem", "bogus")
    assert code == 2 and "bogus" in err


def test_bad_flags_are_usage_errors(capsys):
    assert run(capsys, "verify", "--theorem", "thm-1.2-gauss", "--primes", "9-3")[0] == 2
    assert run(capsys, "verify", "--theorem", "thm-1.2-gauss", "--format", "xml")[0] == 2
    assert run(capsys, "verify", "--theorem", "thm-1.2-gauss", "--strength", "3")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_verify_json_validates(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "thm-1.2-gauss", "--primes", "3:31", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, load_schema())
    assert doc["fails"] == [] and doc["errors"] == []
    assert doc["cases"] == doc["holds"] + doc["condition_not_met"]


def test_verify_all_json_validates(capsys):
    code, out, _ = run(
        capsys, "verify", "--theorem", "all", "--primes", "3:7", "--z-samples", "1", "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, load_schema())
    assert len(doc["reports"]) > 60


def test_schema_rejects_malformed_reports():
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate({"theorem": "x"}, load_schema())


def test_csv_columns(capsys):
    code, out, _ = run(
        capsys, "verify", "--theorem", "eq-1.5-mortenson", "--primes", "5:50", "--format", "csv",
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert rows[1][:3] == ["eq-1.5-mortenson", "5", "50"]
    assert rows[1][6:8] == ["0", "0"]


def test_byte_identical_without_timing(capsys):
    argv = ["verify", "--theorem", "thm-2.1", "--primes", "3:23", "--seed", "42", "--no-timing", "--format", "json"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    parallel = run(capsys, *argv, "--jobs", "2")
    assert first == second == parallel


def test_strength_selects_kilbourn(capsys):
    code, out, _ = run(
        capsys, "verify", "--theorem", "eq-1.3-ahlgren-ono", "--strength", "3", "--primes", "5:23",
    )
    assert code == 0 and "eq-1.3-kilbourn" in out


def test_explicit_tuples_and_negative_params(capsys):
    code, out, _ = run(
        capsys, "verify", "--theorem", "thm-1.2-gauss", "--primes", "5:13", "--params", "1/3,1/4;1/2,1/2",
        "--format", "json",
    )
    assert code == 0 and json.loads(out)["cases"] == 8
    code, _, _ = run(capsys, "verify", "--theorem", "eq-1.5-mortenson", "--primes", "5:13", "--params", "-1/2")
    assert code == 0


def test_failure_gives_exit_one(monkeypatch, capsys):
    from padic_hyper import theorems

    monkeypatch.setattr(theorems, "_off_p", lambda x, p: None)
    code, out, _ = run(capsys, "verify", "--theorem", "thm-5f4-b", "--primes", "3:7")
    assert code == 1 and "FAIL" in out


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0 and "thm-13.1-dflst" in out


def test_report_record_round_trip():
    case = CaseResult(
        "thm-1.2-gauss", 7, (Fraction(1, 2), Fraction(-2, 3)), Fraction(5, 4), Verdict.FAILS, "", "3", "4", 49, 1.6
    )
    rec = ReportRecord.from_case(case)
    assert ReportRecord.parse(rec.render()) == rec
    assert rec.params == ("1/2", "-2/3") and rec.duration_ms == 2
    jsonschema.validate(rec.to_dict(), load_schema()["$defs"]["record"])


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "padic_hyper", "eval", "--gamma", "--alpha", "1", "--p", "11"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "120\n"
