"""Command-line interface: subcommands, formats, and exit codes."""

from __future__ import annotations

import json

import pytest

from spinmtc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- happy paths ----------------------------------------------------------------


def test_validate_builtin(capsys):
    code, out, err = run(capsys, "validate", "fermion")
    assert code == 0
    assert "valid" in out
    assert err == ""


def test_validate_json(capsys):
    code, out, _ = run(capsys, "validate", "fermion", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["valid"] is True
    assert report["violations"] == []


def test_smatrix_table_and_scalar(capsys):
    code, out, _ = run(capsys, "smatrix", "fermion")
    assert code == 0
    assert "alpha = 4" in out
    assert "z16^2 - z16^6" in out


def test_smatrix_numeric_annotation(capsys):
    code, out, _ = run(capsys, "smatrix", "fermion", "--numeric", "4", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["numeric"]["digits"] == 4
    assert "not authoritative" in report["numeric"]["note"]
    assert report["numeric"]["entries"][0][2] == "1.414"


def test_classify_fermion(capsys):
    code, out, _ = run(capsys, "classify", "fermion", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["classification"] == {
        "ns_plus": ["1"],
        "ns_minus": ["psi"],
        "r_plus": [],
        "r_minus": [],
        "r_zero": ["sigma"],
    }
    assert report["all_pass"] is True
    assert set(report["checks"]) == {
        "involution_rows",
        "nonsplit_row_vanishing",
        "block_pattern",
        "diagonal_blocks",
        "bd_rank",
        "btd_zero",
        "count_identity",
    }


def test_sphere_and_torus(capsys):
    code, out, _ = run(capsys, "sphere", "fermion", "--labels", "sigma,sigma")
    assert code == 0
    assert "total dimension      4" in out
    assert "component dimension  2" in out

    code, out, _ = run(capsys, "torus", "fermion", "--format", "json")
    assert code == 0
    assert json.loads(out)["dims"] == {"AA": 1, "AP": 1, "PA": 1, "PP": 0}


def test_minimal_table(capsys):
    code, out, _ = run(capsys, "minimal", "--p", "3", "--q", "5")
    assert code == 0
    assert "c = 7/10" in out
    assert "3/80" in out


def test_minimal_scan(capsys):
    code, out, _ = run(capsys, "minimal-scan", "--max-pq", "50", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["count"] == 15
    assert report["models"][0] == {
        "p": 2,
        "q": 4,
        "c": "0/1",
        "ns_count": 1,
        "r_count": 1,
        "split": False,
    }


def test_singvec_by_model(capsys):
    code, out, _ = run(capsys, "singvec", "--p", "3", "--q", "5", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["degree"] == "4"
    assert report["space_dim"] == 1
    assert report["leading_monomial"] == "G[-5/2] G[-3/2]"
    assert report["lambda"] == "-2/3"
    assert report["shape_ok"] is True


def test_singvec_by_parameters(capsys):
    code, out, _ = run(
        capsys, "singvec", "--c", "7/10", "--h", "1/10", "--degree", "3/2",
        "--format", "json",
    )
    assert code == 0
    report = json.loads(out)
    assert report["vector"] == [{"monomial": "G[-3/2]", "coeff": "1/1"}]


def test_builtin_emits_loadable_file(capsys, tmp_path):
    code, out, _ = run(capsys, "builtin", "toric")
    assert code == 0
    path = tmp_path / "toric.json"
    path.write_text(out)
    code, out2, _ = run(capsys, "validate", str(path))
    assert code == 0
    assert "valid" in out2


def test_real_file_wins_over_builtin_key(capsys, tmp_path, monkeypatch):
    # A file literally named "fermion" in cwd takes precedence.
    code, out, _ = run(capsys, "builtin", "dirac")
    monkeypatch.chdir(tmp_path)
    (tmp_path / "fermion").write_text(out)
    code, out, _ = run(capsys, "validate", "fermion", "--format", "json")
    assert code == 0
    assert json.loads(out)["category"] == "dirac"


def test_output_is_deterministic(capsys):
    outputs = []
    for _ in range(2):
        _, out, _ = run(capsys, "classify", "dirac", "--format", "json")
        outputs.append(out)
    assert outputs[0] == outputs[1]


def test_report_round_trip_through_file(capsys, tmp_path):
    # Reports computed from a re-ingested builtin dump are byte-identical.
    _, dump, _ = run(capsys, "builtin", "fermion")
    path = tmp_path / "f.json"
    path.write_text(dump)
    results = {}
    for target in ("fermion", str(path)):
        for cmd in (
            ["validate", target, "--format", "json"],
            ["smatrix", target, "--format", "json"],
            ["classify", target, "--format", "json"],
            ["torus", target, "--format", "json"],
        ):
            code = main(cmd)
            out = capsys.readouterr().out
            assert code == 0
            results.setdefault(tuple(cmd[:1]), []).append(out)
    for cmd, (from_key, from_file) in results.items():
        assert from_key == from_file, cmd


# --- failure paths -----------------------------------------------------------------


def test_unknown_input_is_exit_2(capsys):
    code, _, err = run(capsys, "validate", "nosuchthing")
    assert code == 2
    assert "no such file or builtin" in err


def test_corrupted_field_gives_witness_not_crash(capsys, tmp_path):
    _, dump, _ = run(capsys, "builtin", "fermion")
    doc = json.loads(dump)
    corruptions = [
        ("fusion", [e if e[:3] != ["sigma", "sigma", "psi"] else e[:3] + [2] for e in doc["fusion"]]),
        ("qdim", {**doc["qdim"], "sigma": "2"}),
        ("dual", {**doc["dual"], "psi": "sigma"}),
        ("unit", "psi"),
    ]
    for field, bad_value in corruptions:
        bad = dict(doc)
        bad[field] = bad_value
        path = tmp_path / f"bad_{field}.json"
        path.write_text(json.dumps(bad))
        code, out, _ = run(capsys, "validate", str(path), "--format", "json")
        assert code == 1, field
        report = json.loads(out)
        assert report["valid"] is False
        assert report["violations"], field
        assert report["violations"][0]["witness"], field


def test_malformed_file_is_exit_2(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, _, err = run(capsys, "validate", str(path))
    assert code == 2

    path2 = tmp_path / "extra.json"
    _, dump, _ = run(capsys, "builtin", "trivial")
    doc = json.loads(dump)
    doc["surprise"] = 1
    path2.write_text(json.dumps(doc))
    code, _, err = run(capsys, "validate", str(path2))
    assert code == 2
    assert "unknown keys" in err


def test_no_vminus_is_exit_1(capsys):
    code, _, err = run(capsys, "classify", "trivial")
    assert code == 1
    assert "no admissible odd generator" in err


def test_ambiguous_vminus_lists_candidates(capsys, tmp_path):
    # A product category with two odd generators requires --vminus.
    from spinmtc.catalog import builtin as make
    from spinmtc.fusion import deligne_product, dump_fusion

    prod = deligne_product(make("fermion"), make("fermion"))
    path = tmp_path / "prod.json"
    path.write_text(dump_fusion(prod))
    code, _, err = run(capsys, "classify", str(path))
    assert code == 1
    assert "(1,psi)" in err and "(psi,1)" in err

    code, out, _ = run(capsys, "classify", str(path), "--vminus", "(1,psi)")
    assert code == 0

    code, _, err = run(capsys, "classify", str(path), "--vminus", "sigma")
    assert code == 2


def test_invalid_model_parameters_are_exit_2(capsys):
    code, _, err = run(capsys, "minimal", "--p", "3", "--q", "4")
    assert code == 2
    assert "equal parity" in err
    code, _, err = run(capsys, "singvec", "--p", "4", "--q", "8")
    assert code == 2


def test_mixed_singvec_flag_groups_are_exit_2(capsys):
    code, _, err = run(capsys, "singvec", "--p", "3")
    assert code == 2
    code, _, err = run(capsys, "singvec", "--p", "3", "--q", "5", "--c", "1/2")
    assert code == 2
    code, _, err = run(capsys, "singvec", "--c", "1/2", "--h", "0")
    assert code == 2


def test_degree_cap_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("SPINMTC_MAX_DEGREE", "4")
    code, _, err = run(capsys, "singvec", "--p", "3", "--q", "7")
    assert code == 2
    assert "exceeds the limit 4" in err

    monkeypatch.setenv("SPINMTC_MAX_DEGREE", "6")
    code, _, _ = run(capsys, "singvec", "--p", "3", "--q", "7")
    assert code == 0

    monkeypatch.setenv("SPINMTC_MAX_DEGREE", "many")
    code, _, err = run(capsys, "singvec", "--p", "3", "--q", "7")
    assert code == 2
    assert "SPINMTC_MAX_DEGREE" in err


def test_default_degree_cap_allows_the_reference_models(capsys, monkeypatch):
    monkeypatch.delenv("SPINMTC_MAX_DEGREE", raising=False)
    for p, q in [(2, 4), (3, 5), (3, 7), (2, 8)]:
        code, _, _ = run(capsys, "singvec", "--p", str(p), "--q", str(q))
        assert code == 0, (p, q)


def test_bad_flags_are_exit_2(capsys):
    assert main(["smatrix"]) == 2
    capsys.readouterr()
    assert main(["no-such-command"]) == 2
    capsys.readouterr()
    assert main(["sphere", "fermion"]) == 2
    capsys.readouterr()


def test_sphere_unknown_label_is_exit_2(capsys):
    code, _, err = run(capsys, "sphere", "fermion", "--labels", "sigma,ghost")
    assert code == 2
    assert "ghost" in err
