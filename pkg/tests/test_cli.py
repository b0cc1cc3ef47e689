import json

import pytest

from qcong.cli import EXIT_FAIL, EXIT_INTERNAL, EXIT_OK, EXIT_USAGE, main

REPORT_FIELDS = {"claim", "family", "params", "n_checked", "outcome", "counterexamples", "order", "millis"}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_expand_golden(capsys):
    code, out, _ = run(capsys, "expand", "2", "5", "13")
    assert code == EXIT_OK
    assert out.splitlines()[-1] == "13\t2"
    assert len(out.splitlines()) == 14


def test_expand_zero_and_modulus(capsys):
    assert run(capsys, "expand", "2", "5", "0")[1] == "0\t1\n"
    code, out, _ = run(capsys, "expand", "2", "5", "--order", "14", "--modulus", "2")
    assert out.splitlines()[13] == "13\t0"


def test_expand_rejects_non_coprime(capsys):
    code, out, err = run(capsys, "expand", "4", "6")
    assert code != EXIT_OK and out == "" and "coprime" in err


def test_expand_budget(capsys):
    code, _, err = run(capsys, "expand", "2", "5", "--order", "1000", "--budget", "10")
    assert code == EXIT_INTERNAL and "budget" in err


@pytest.mark.parametrize("rs", [("2", "5"), ("2", "7"), ("4", "9")])
def test_oracle_all_ok(capsys, rs):
    code, out, _ = run(capsys, "oracle", *rs, "200")
    lines = out.splitlines()
    assert code == EXIT_OK and len(lines) == 201
    assert all(line.endswith("\tOK") for line in lines)


def test_check_identity(capsys):
    code, out, _ = run(capsys, "check-identity", "t3", "500")
    assert code == EXIT_OK and out.startswith("PASS\tt3")
    assert run(capsys, "check-identity", "g1", "300")[0] == EXIT_OK
    assert run(capsys, "check-identity", "u10-11")[0] == EXIT_OK
    assert run(capsys, "check-identity", "s45")[0] == EXIT_OK


def test_check_identity_unknown(capsys):
    code, out, err = run(capsys, "check-identity", "bogus")
    assert code == EXIT_USAGE and "unknown identity" in err
    assert run(capsys, "check-identity", "u10-x")[0] == EXIT_USAGE


def test_check_identity_failure_output(capsys, monkeypatch):
    from qcong import cli
    from qcong.reports import FAIL, VerificationReport

    def fake(identity, order):
        return VerificationReport("x", "identity", {}, 10, FAIL, [{"exponent": 7, "lhs": 3, "rhs": 4}], 10)

    monkeypatch.setattr(cli, "_identity_report", fake)
    code, out, _ = run(capsys, "check-identity", "t1")
    assert code == EXIT_FAIL
    assert "q^7" in out and "lhs=3" in out and "rhs=4" in out


def test_usage_errors(capsys):
    assert run(capsys)[0] == EXIT_USAGE
    assert run(capsys, "frobnicate")[0] == EXIT_USAGE
    assert run(capsys, "expand", "2", "x")[0] == EXIT_USAGE
    assert run(capsys, "expand", "2", "5", "-3")[0] == EXIT_USAGE
    assert run(capsys, "verify", "thm99")[0] == EXIT_USAGE
    assert run(capsys, "verify", "thm1", "--format", "xml")[0] == EXIT_USAGE
    assert run(capsys, "primes", "--limit", "5")[0] == EXIT_USAGE


def test_verify_thm1_text(capsys):
    code, out, _ = run(capsys, "verify", "thm1")
    lines = out.splitlines()
    assert code == EXIT_OK
    assert sum(line.startswith("PASS\tthm1/") for line in lines) == 2
    assert lines[-1] == "total 2: 2 PASS, 0 FAIL, 0 SKIPPED"


def test_verify_thm4_json_includes_abstract_instance(capsys):
    code, out, _ = run(capsys, "verify", "thm4", "--format", "json")
    reports = json.loads(out)
    assert code == EXIT_OK
    assert all(REPORT_FIELDS <= set(r) for r in reports)
    assert any("a(2,5)(20n+6) = 0 (mod 4)" == r["claim"] and r["outcome"] == "PASS" for r in reports)


def test_verify_text_and_json_agree(capsys, tmp_path):
    out_path = tmp_path / "r.json"
    assert run(capsys, "verify", "thm9", "--format", "json", "--out", str(out_path))[0] == EXIT_OK
    js = json.loads(out_path.read_text(encoding="utf-8"))
    _, text, _ = run(capsys, "verify", "thm9")
    rows = [line.split("\t") for line in text.splitlines()[1:-1]]
    assert [(r[0], r[1]) for r in rows] == [(r["outcome"], r["family"]) for r in js]


def test_verify_budget_env_skips(capsys, monkeypatch):
    monkeypatch.setenv("QC_BUDGET", "50")
    code, out, _ = run(capsys, "verify", "thm1", "--format", "json")
    reports = json.loads(out)
    assert code == EXIT_OK
    assert {r["outcome"] for r in reports} == {"SKIPPED"}
    assert all("budget" in r["reason"] for r in reports)


def test_verify_is_deterministic(capsys):
    _, first, _ = run(capsys, "verify", "thm7")
    _, second, _ = run(capsys, "verify", "thm7")
    assert first == second


def test_primes(capsys):
    code, out, _ = run(capsys, "primes", "--limit", "20")
    assert code == EXIT_OK
    assert out == "thm3\t17\nthm5\t11 17\nthm8\t11 13 17 19\n"
    assert run(capsys, "primes", "thm5", "--limit", "20")[1] == "thm5\t11 17\n"
    assert run(capsys, "primes", "nope")[0] == EXIT_USAGE
