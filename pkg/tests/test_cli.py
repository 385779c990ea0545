import json

import pytest

from cayleysn.charcache import ENV_VAR
from cayleysn.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_rule_counterexample(capsys):
    code, out, _ = run(capsys, "rule", "16", "5^3 1^1", "--json")
    rec = json.loads(out)
    assert code == 0
    assert rec["kind"] == "rule"
    assert rec["argmax"] == ["11,5", "2,2,2,2,2,1,1,1,1,1,1"]
    assert rec["max"] == "3/2548" and rec["beats_eight"] is True


def test_rule_std_with_fixed_points(capsys):
    _, out, _ = run(capsys, "rule", "20", "2^1 1^18", "--json")
    assert "19,1" in json.loads(out)["argmax"]


def test_rule_identity_ties(capsys):
    _, out, _ = run(capsys, "rule", "9", "1^9", "--json")
    assert len(json.loads(out)["argmax"]) == 28


@pytest.mark.parametrize("argv", [("rule", "9", "1^8"), ("rule", "9", "q^2")])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(list(argv))
    assert exc.value.code == 2


def test_scan_exit_codes(capsys):
    code, out, err = run(capsys, "scan", "16", "16", "--json")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 1
    assert [r["class"] for r in lines if r["kind"] == "violation"] == ["5^3 1^1"]
    assert "scan n=16" in err
    code, out, _ = run(capsys, "scan", "17", "17", "--quiet")
    assert code == 0 and "violations=0" in out


def test_audit_dims_summary(capsys):
    code, out, _ = run(capsys, "audit-dims", "--n", "13", "--outside", "3", "--exp", "41/20")
    assert code == 0
    assert out.splitlines()[-1] == "93 checked, 0 failures"


def test_construct(capsys):
    code, out, _ = run(capsys, "construct", "--n", "100", "--k", "2", "--json")
    records = [json.loads(x) for x in out.splitlines()]
    spec = records[0]
    assert code == 0 and spec["kind"] == "annihilator"
    assert spec["rows"][0] == {"counts": [4, 0], "probability": "1/24", "class": "6^1 3^30 1^4",
                               "alpha": spec["rows"][0]["alpha"]}
    assert records[-1]["annihilated"] is True


def test_schreier_reports_every_check(capsys, tmp_path):
    code, out, _ = run(capsys, "schreier", "--n", "12", "--json", "--export", str(tmp_path))
    checks = {r["check"]: r for r in map(json.loads, out.splitlines()) if r["kind"] == "schreier-check"}
    assert set(checks) == {"ordered_gap", "rayleigh", "points_scaled_gap", "points_gap_floor", "not_std"}
    assert (code == 0) == all(c["pass"] for c in checks.values())
    assert (tmp_path / "ordered_n12.mtx").exists() and (tmp_path / "points_n12.csv").exists()


def test_oracle_and_transpositions(capsys):
    code, out, _ = run(capsys, "oracle", "--n", "4", "5", "--samples", "3", "--json")
    assert code == 0 and len(out.splitlines()) == 2
    code, out, _ = run(capsys, "oracle", "--n", "4", "--samples", "3", "--transpositions")
    assert code == 0 and out.startswith("transpositions")


def test_table1_tables23_and_eight_floor(capsys):
    assert run(capsys, "table1-check", "--n-from", "8", "--n-to", "9")[0] == 0
    code, out, _ = run(capsys, "tables23-check", "--n", "20", "--json")
    assert code == 0 and json.loads(out.splitlines()[-1])["mismatches"] == 0
    assert run(capsys, "eight-floor", "--n-from", "17", "--n-to", "18")[0] == 0


def test_gap_check(capsys):
    code, out, _ = run(capsys, "gap-check", "--n-from", "17", "--n-to", "17", "--samples", "4", "--quiet")
    assert code == 0 and "sample_violations=0" in out


def test_json_output_is_reproducible(capsys):
    argv = ("schreier", "--n", "10", "--json")
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv)[1] == first
    argv = ("gap-check", "--n-from", "17", "--n-to", "17", "--samples", "3", "--json", "--quiet")
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_json_numbers_are_exact_strings(capsys):
    _, out, _ = run(capsys, "rule", "10", "3^2 2^2", "--json")
    rec = json.loads(out)
    assert "/" in rec["max"] and "/" in rec["eight_max"]


def test_cache_flag_and_env(capsys, tmp_path, monkeypatch):
    path = tmp_path / "cache.tsv"
    code, plain, _ = run(capsys, "scan", "12", "12", "--quiet", "--json")
    code2, cached, _ = run(capsys, "scan", "12", "12", "--quiet", "--json", "--cache", str(path))
    assert path.exists() and cached == plain and code == code2
    before = path.read_bytes()
    monkeypatch.setenv(ENV_VAR, str(path))
    assert run(capsys, "scan", "12", "12", "--quiet", "--json")[1] == plain
    assert path.read_bytes() == before


def test_stale_cache_fails_loudly(tmp_path):
    path = tmp_path / "old.tsv"
    path.write_text("something else\n")
    from cayleysn.errors import CacheVersionError
    with pytest.raises(CacheVersionError):
        main(["scan", "12", "12", "--cache", str(path)])
