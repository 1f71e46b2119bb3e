import json

import pytest

from equivote.cli import main
from equivote.serialize import load_rule_file
from equivote.verify import CheckResult, VerificationReport


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def make_rule(capsys, tmp_path, name, *argv):
    path = tmp_path / name
    rc, _, err = run(capsys, "construct", *argv, "--out", str(path))
    assert rc == 0, err
    return str(path)


def test_eval_majority(capsys, tmp_path):
    rule = make_rule(capsys, tmp_path, "maj3.rule", "--type", "majority", "--n", "3")
    rc, out, _ = run(capsys, "eval", "--rule", rule, "--profile", "1,1,-1")
    assert (rc, out) == (0, "1\n")


def test_eval_longest_run(capsys, tmp_path):
    rule = make_rule(
        capsys, tmp_path, "lr5.rule", "--type", "longest_run", "--n", "5"
    )
    rc, out, _ = run(capsys, "eval", "--rule", rule, "--profile", "1,1,1,-1,-1")
    assert (rc, out) == (0, "1\n")
    rc, out, _ = run(capsys, "eval", "--rule", rule, "--profile", "1, 0, 0, 1, -1")
    assert (rc, out) == (0, "1\n")


def test_eval_grd(capsys, tmp_path):
    rule = make_rule(capsys, tmp_path, "grd.rule", "--type", "grd", "--branching", "3,3")
    rc, out, _ = run(
        capsys, "eval", "--rule", rule, "--profile", "1,1,1,1,1,-1,-1,-1,-1"
    )
    assert (rc, out) == (0, "1\n")


def test_construct_documents(capsys, tmp_path):
    fano = json.loads(open(make_rule(capsys, tmp_path, "f.rule", "--type", "fano", "--p", "2")).read())
    assert fano["type"] == "coalition"
    assert fano["n"] == 7
    assert fano["provenance"]["kind"] == "projective_plane"

    grd = json.loads(open(make_rule(capsys, tmp_path, "g.rule", "--type", "grd", "--branching", "3,3")).read())
    assert grd["tree"] == [[0, 1, 2], [3, 4, 5], [6, 7, 8]]

    orbit = json.loads(
        open(
            make_rule(
                capsys,
                tmp_path,
                "o.rule",
                "--type",
                "group_orbit",
                "--group",
                "cyclic",
                "--n",
                "16",
                "--seed",
                "0",
            )
        ).read()
    )
    assert orbit["n"] == 16
    assert orbit["provenance"]["kind"] == "group_orbit"
    assert orbit["provenance"]["group"] == {"kind": "cyclic", "n": 16}


def test_construct_missing_flag(capsys):
    rc, _, err = run(capsys, "construct", "--type", "majority")
    assert rc == 2
    assert err.startswith("error:")
    rc, _, err = run(capsys, "construct", "--type", "ccc", "--rows", "2")
    assert rc == 2
    rc, _, err = run(capsys, "construct", "--type", "group_orbit", "--seed", "1")
    assert rc == 2


def test_eval_errors(capsys, tmp_path):
    rule = make_rule(capsys, tmp_path, "m5.rule", "--type", "majority", "--n", "5")
    rc, _, err = run(capsys, "eval", "--rule", rule, "--profile", "1,1")
    assert rc == 2
    assert "error:" in err
    rc, _, err = run(capsys, "eval", "--rule", rule, "--profile", "1,x,1,1,1")
    assert rc == 2
    rc, _, err = run(capsys, "eval", "--rule", str(tmp_path / "no.rule"), "--profile", "1")
    assert rc == 2
    bad = tmp_path / "bad.rule"
    bad.write_text("{not json")
    rc, _, err = run(capsys, "eval", "--rule", str(bad), "--profile", "1")
    assert rc == 2


def test_analyze_machine(capsys, tmp_path):
    rule = make_rule(capsys, tmp_path, "fano.rule", "--type", "fano", "--p", "2")
    rc, out, _ = run(
        capsys,
        "analyze",
        "--rule",
        rule,
        "--equity",
        "--k",
        "2",
        "--format",
        "machine",
    )
    assert rc == 0
    doc = json.loads(out)
    assert doc["equitable"] == "true"
    assert doc["k_equity"] == {"2": "true"}
    assert doc["rule"]["type"] == "coalition"
    assert doc["caps"]["workers"] == 1


def test_analyze_dictatorship(capsys, tmp_path):
    rule = make_rule(
        capsys, tmp_path, "d.rule", "--type", "dictatorship", "--n", "4"
    )
    rc, out, _ = run(capsys, "analyze", "--rule", rule, "--equity", "--format", "machine")
    assert rc == 0
    assert json.loads(out)["equitable"] == "false"


def test_analyze_min_coalition(capsys, tmp_path):
    rule = make_rule(capsys, tmp_path, "m5.rule", "--type", "majority", "--n", "5")
    rc, out, _ = run(
        capsys, "analyze", "--rule", rule, "--min-coalition", "--format", "machine"
    )
    assert rc == 0
    assert json.loads(out)["min_coalition"]["size"] == 3


def test_analyze_caps(capsys, tmp_path):
    rule = make_rule(
        capsys, tmp_path, "lr9.rule", "--type", "longest_run", "--n", "9"
    )
    rc, _, err = run(capsys, "analyze", "--rule", rule, "--caps", "depth=3")
    assert rc == 2
    assert "unknown cap" in err
    rc, out, _ = run(
        capsys,
        "analyze",
        "--rule",
        rule,
        "--equity",
        "--min-coalition",
        "--caps",
        "scan=5",
        "--format",
        "machine",
    )
    assert rc == 0
    doc = json.loads(out)
    assert doc["caps"]["scan"] == 5
    assert doc["equitable"] == "true"
    assert doc["methods"]["equitable"] == "rotation+structural"
    assert doc["methods"]["min_coalition"] == "infeasible"
    assert "min_coalition" not in doc


def test_verify_human(capsys):
    rc, out, _ = run(capsys, "verify", "lemma3")
    assert rc == 0
    assert "[PASS] lemma3" in out
    assert out.strip().endswith("overall: PASS")


def test_verify_machine_deterministic(capsys, tmp_path):
    rc1, out1, _ = run(capsys, "verify", "lemma3", "--format", "machine")
    rc2, out2, _ = run(capsys, "verify", "lemma3", "--format", "machine")
    assert rc1 == rc2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["passed"] is True
    assert doc["reports"]["lemma3"]["passed"] is True
    assert "wall_time_s" not in doc["reports"]["lemma3"]

    path = tmp_path / "verify.json"
    rc3, out3, _ = run(
        capsys, "verify", "lemma3", "--format", "machine", "--out", str(path)
    )
    assert rc3 == 0
    assert out3 == ""
    assert path.read_text() == out1


def test_verify_overrides(capsys):
    rc, out, _ = run(capsys, "verify", "lemma3", "--n", "3,5", "--format", "machine")
    assert rc == 0
    assert json.loads(out)["reports"]["lemma3"]["params"]["ns"] == [3, 5]

    rc, _, _ = run(capsys, "verify", "thm3", "--depth", "1")
    assert rc == 0

    rc, _, _ = run(
        capsys, "verify", "prop4", "--group", "cyclic", "--n", "16", "--seed", "0"
    )
    assert rc == 0


def test_verify_override_rejects_all(capsys):
    rc, _, err = run(capsys, "verify", "all", "--n", "4")
    assert rc == 2
    assert "single claim" in err


def test_verify_bad_grid(capsys):
    rc, _, err = run(capsys, "verify", "lemma3", "--n", "x..y")
    assert rc == 2
    assert err.startswith("error:")


def test_verify_failure_exit_code(capsys, monkeypatch):
    import equivote.cli as cli

    broken = VerificationReport(
        claim="lemma3",
        passed=False,
        checks=(CheckResult(name="probe", passed=False, detail="forced"),),
        params={},
        wall_time=0.0,
    )
    monkeypatch.setattr(cli, "verify_claim", lambda claim, **kw: broken)
    rc, out, _ = run(capsys, "verify", "lemma3")
    assert rc == 1
    assert "[FAIL] lemma3" in out
    assert "FAIL probe: forced" in out
    assert out.strip().endswith("overall: FAIL")

    rc, out, _ = run(capsys, "verify", "lemma3", "--format", "machine")
    assert rc == 1
    assert json.loads(out)["passed"] is False


def test_bad_usage_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "thm99"])
    assert exc.value.code == 2


def test_construct_serialize_parse_analyze_roundtrip(capsys, tmp_path):
    first = make_rule(capsys, tmp_path, "c34.rule", "--type", "ccc", "--rows", "3", "--cols", "4")
    reparsed = tmp_path / "c34b.rule"
    from equivote.serialize import dumps_rule

    reparsed.write_text(dumps_rule(load_rule_file(first)) + "\n")
    assert reparsed.read_text() == open(first).read()

    rc1, out1, _ = run(
        capsys, "analyze", "--rule", first, "--equity", "--cyclic", "--format", "machine"
    )
    rc2, out2, _ = run(
        capsys, "analyze", "--rule", str(reparsed), "--equity", "--cyclic", "--format", "machine"
    )
    assert rc1 == rc2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["equitable"] == "true"
    assert doc["cyclic"] == "true"
