import json
from fractions import Fraction
from pathlib import Path

import pytest

from qpowersums import cli
from qpowersums.errors import InvalidRange, UnknownSuite, VersionMismatch
from qpowersums.harness import RunConfig, build_report, run_suite
from qpowersums.report import CheckRecord, Report, Suite, compare_golden

GOLDEN = Path(__file__).parent / "golden" / "report.json"


def small_report():
    cfg = RunConfig(n_max=3, k_max=2)
    return build_report(["warnaar", "theorem3-paper"], cfg)


def test_warnaar_three_records():
    recs = run_suite("warnaar", RunConfig(n_max=3))
    assert len(recs) == 3 and all(r.verdict == "pass" and r.residual == "(0)" for r in recs)


def test_theorem3_paper_n1_k1_fails():
    recs = run_suite("theorem3-paper", RunConfig(n_max=1, k_max=1))
    assert {r.param("sign") for r in recs} == {"1", "-1"}
    assert all(r.verdict == "fail" and r.residual != "(0)" for r in recs)


def test_empty_range_and_errors():
    assert run_suite("warnaar", RunConfig(n_max=0)) == []
    with pytest.raises(UnknownSuite):
        run_suite("no-such-suite")
    with pytest.raises(InvalidRange):
        run_suite("warnaar", RunConfig(n_max=-1))


def test_records_sorted_numerically():
    recs = run_suite("warnaar", RunConfig(n_max=11))
    assert [r.param("n") for r in recs] == [str(n) for n in range(1, 12)]


def test_record_verdict_validation():
    with pytest.raises(ValueError):
        CheckRecord.make("s", {}, "a", "b", "maybe", "")


def test_json_roundtrip_and_determinism():
    a, b = small_report(), small_report()
    assert a.to_json() == b.to_json()
    assert a.to_json().endswith("\n")
    assert Report.from_json(a.to_json()) == a
    assert list(json.loads(a.to_json())) == ["format_version", "tool_version", "suites"]


def test_empty_report():
    r = Report([])
    assert Report.from_json(r.to_json()) == r
    assert json.loads(r.to_json())["suites"] == []


def test_markdown_has_a_table_per_suite():
    md = small_report().to_markdown()
    assert md.count("| params | verdict | residual |") == 2


def test_emit_twice_identical(tmp_path):
    recs = run_suite("kim", RunConfig(n_max=3))
    cli.emit_report(recs, "json", str(tmp_path / "a.json"))
    cli.emit_report(recs, "json", str(tmp_path / "b.json"))
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()


def test_compare_golden_cases():
    rep = small_report()
    assert compare_golden(rep, small_report()) == ([], 0)

    flipped = Report([Suite(s.name, list(s.records), s.tolerance) for s in rep.suites])
    r0 = flipped.suites[0].records[0]
    flipped.suites[0].records[0] = CheckRecord(r0.suite, r0.params, r0.lhs, r0.rhs, "fail", r0.residual)
    diff, status = compare_golden(flipped, rep)
    assert status == 1 and diff == ["verdict warnaar[n=1]: pass -> fail"]

    missing = Report(rep.suites[:1])
    diff, status = compare_golden(rep, missing)
    assert status == 1 and diff == ["added suite theorem3-paper"]

    with pytest.raises(VersionMismatch):
        compare_golden(rep, Report(rep.suites, format_version=99))


# -- CLI ----------------------------------------------------------------------


def test_cli_verify_matches_golden_subset(tmp_path, capsys):
    golden = Report.from_json(GOLDEN.read_text())
    sub = Report([s for s in golden.suites if s.name == "schlosser"])
    path = tmp_path / "g.json"
    path.write_text(sub.to_json())
    assert cli.main(["verify", "--suite", "schlosser", "--golden", str(path), "--out", str(tmp_path / "o.json")]) == 0
    # a narrower range removes records and must be flagged
    assert cli.main(["verify", "--suite", "schlosser", "--n-max", "3", "--golden", str(path),
                     "--out", str(tmp_path / "o.json")]) == 1
    assert "removed record schlosser[m=2, n=10]" in capsys.readouterr().err


def test_cli_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "--q", "1.5"])
    assert exc.value.code == 2
    assert cli.main(["verify", "--suite", "bogus"]) == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["eval", "sum", "--m", "2"])
    assert exc.value.code == 2
    assert cli.main(["limit", "--op", "nope"]) == 2


def test_cli_exact_q_parsing():
    assert cli.exact_fraction("9/4") == Fraction(9, 4)
    assert cli.exact_fraction("2") == 2
    for bad in ("1.5", "1e3", "a/b", "1/0"):
        with pytest.raises(Exception):
            cli.exact_fraction(bad)


def test_cli_eval_and_limit(capsys):
    assert cli.main(["eval", "beta-star", "--n", "1", "--k", "1"]) == 0
    out = capsys.readouterr().out
    assert "beta_star: (v^2) / (v^4 - 2*v^2 + 1)  [regularized]" in out
    assert cli.main(["eval", "sum", "--m", "3", "--n", "2"]) == 0
    assert capsys.readouterr().out.strip() == "(v^8 + 2*v^6 + 3*v^4 + 2*v^2 + 1)"
    assert cli.main(["limit", "--op", "schlosser-sum", "--params", "m=2", "n=3"]) == 0
    assert capsys.readouterr().out.strip() == "14"
    assert cli.main(["limit", "--op", "q-bracket", "--params", "e=3/2"]) == 0
    assert capsys.readouterr().out.strip() == "3/2"
    assert cli.main(["eval", "zeta", "--s", "0", "--k", "1"]) == 0
    assert "(-v^2) / (v^4 - 2*v^2 + 1)" in capsys.readouterr().out
    assert cli.main(["eval", "zeta", "--s", "3", "--k", "1", "--q", "3/2"]) == 0
    assert "numbers:" in capsys.readouterr().out


def test_cli_markdown(capsys):
    assert cli.main(["verify", "--suite", "kim", "--n-max", "2", "--format", "md"]) == 0
    assert "## kim" in capsys.readouterr().out


def test_cli_strict_exit_on_singular(monkeypatch, tmp_path):
    sing = CheckRecord.make("theorem1-paper", {"n": 3, "k": 1}, "singular", "(0)", "singular", "singular")
    monkeypatch.setattr(cli, "build_report", lambda names, cfg: Report([Suite("theorem1-paper", [sing])]))
    out = str(tmp_path / "r.json")
    assert cli.main(["verify", "--suite", "theorem1-paper", "--strict", "--out", out]) == 3
    assert cli.main(["verify", "--suite", "theorem1-paper", "--out", out]) == 0


def test_cli_error_records_exit_nonzero(monkeypatch, tmp_path):
    err = CheckRecord.make("warnaar", {"n": 1}, "", "", "error", "PoleAtPoint: x")
    monkeypatch.setattr(cli, "build_report", lambda names, cfg: Report([Suite("warnaar", [err])]))
    assert cli.main(["verify", "--suite", "warnaar", "--out", str(tmp_path / "r.json")]) == 1
