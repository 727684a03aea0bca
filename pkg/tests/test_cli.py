import json

import pytest

from hughesptr import build_reduced_T, build_T2, field_ctx
from hughesptr.cli import main


def run_cli(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr().out


def test_gen_reduced_smallest(capsys):
    code, out = run_cli(capsys, ["gen", "--p", "3", "--e", "1", "--form", "reduced"])
    assert code == 0
    data = json.loads(out)
    assert data == build_reduced_T(field_ctx(3, 1)).to_json_dict()


def test_gen_t2_and_text(capsys):
    code, out = run_cli(capsys, ["gen", "--p", "3", "--e", "1", "--form", "t2"])
    assert code == 0
    assert json.loads(out) == build_T2(field_ctx(3, 1)).to_json_dict()
    code, out = run_cli(capsys, ["gen", "--p", "3", "--e", "1", "--format", "text"])
    assert code == 0
    assert "M(X,Y)" in out


def test_gen_rejects_composite_p(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["gen", "--p", "4", "--e", "1"])
    assert exc.value.code == 2
    assert "odd prime" in capsys.readouterr().err


def test_rejects_field_over_ceiling(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["gen", "--p", "3", "--e", "5"])
    assert exc.value.code == 2


def test_large_field_warning_with_override(capsys):
    # text rendering stays cheap even above the default order bound
    code = main(["gen", "--p", "3", "--e", "5", "--max-order", "100000", "--format", "text"])
    captured = capsys.readouterr()
    assert code == 0
    assert "warning" in captured.err
    assert "M(X,Y)" in captured.out


def test_verify_passes(capsys):
    code, out = run_cli(capsys, ["verify", "--p", "3", "--e", "1"])
    assert code == 0
    report = json.loads(out)
    for label in ["A", "B", "C", "D", "E", "x_sections", "y_sections", "z_sections"]:
        assert report[label]["pass"]
    assert report["polynomial_matches_piecewise"]["pass"]


def test_verify_with_plane(capsys):
    code, out = run_cli(capsys, ["verify", "--p", "3", "--e", "1", "--plane"])
    assert code == 0
    assert json.loads(out)["projective_plane"]["pass"]


def test_plane_subcommand(capsys):
    code, out = run_cli(capsys, ["plane", "--p", "3", "--e", "1"])
    assert code == 0
    data = json.loads(out)
    assert data["points"] == data["lines"] == 91
    assert data["points_per_line"] == 10


def test_du_deterministic_and_worker_independent(capsys):
    args = ["du", "--p", "3", "--e", "1", "--exhaustive"]
    code1, out1 = run_cli(capsys, args)
    code2, out2 = run_cli(capsys, args)
    assert code1 == code2 == 0
    assert out1 == out2
    code3, out3 = run_cli(capsys, args + ["--workers", "2"])
    assert code3 == 0
    assert out3 == out1


def test_du_sampled(capsys):
    code, out = run_cli(capsys, ["du", "--p", "7", "--e", "1", "--samples", "20"])
    assert code == 0
    data = json.loads(out)
    assert len(data["x"]["per_fixing"]) == 20
    assert data["x"]["aggregate"]["pass"]


def test_du_single_section(capsys):
    code, out = run_cli(capsys, ["du", "--p", "3", "--e", "1", "--section", "y", "--exhaustive"])
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"y"}
    assert data["y"]["aggregate"]["max_delta"] == 9


def test_identities_subcommand(capsys):
    code, out = run_cli(capsys, ["identities", "--p", "3", "--e", "1", "--max-n", "60"])
    assert code == 0
    report = json.loads(out)
    assert set(report) == {
        "lucas",
        "central_binom_split",
        "doubled_binom",
        "catalan_binom",
        "gen_catalan_diff",
        "catalan_block",
        "catalan_zero",
    }
    assert all(v["pass"] for v in report.values())


def test_out_file(tmp_path, capsys):
    target = tmp_path / "poly.json"
    code = main(["gen", "--p", "3", "--e", "1", "--out", str(target)])
    assert code == 0
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text()) == build_reduced_T(field_ctx(3, 1)).to_json_dict()
