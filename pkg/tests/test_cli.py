"""Command-line interface: exit codes, JSON output, and round trips."""

import json

import pytest

from toricbundles.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_census_text_output(capsys):
    code, out, err = run(capsys, "census", "--a", "1,4,4", "--s", "2", "--kappa", "8")
    assert code == 0
    assert "N(8) = 2" in out
    assert "kappa > 7" in out
    assert "stable count: 2" in out


def test_census_json_output(capsys):
    code, out, _ = run(
        capsys, "census", "--a", "1,4,4", "--s", "2", "--kappa", "15/2", "--json"
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["breakpoints"][0]["new_members"] == [[1, 4, 4], [2, 2, 5]]
    assert obj["count"] == {"kappa": "15/2", "value": 2}
    assert obj["stable_count"] == 2
    assert obj["stabilization_threshold"] == "31"


def test_census_infinity_and_cap(capsys):
    code, out, _ = run(
        capsys, "census", "--a", "5", "--s", "1", "--cap", "9", "--infinity", "--json"
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["count_at_infinity"] == "infinite"
    code, _, err = run(capsys, "census", "--a", "5", "--s", "1")
    assert code == 1
    assert "CapRequired" in err


def test_equiv_exit_codes_and_sorting(capsys):
    code, out, err = run(capsys, "equiv", "--a", "4,4,1", "--b", "2,2,5", "--s", "2")
    assert code == 0
    assert "equivalent: C = 0" in out
    assert "sorted to (1, 4, 4)" in err
    # a decided negative is still a successful run
    code, out, _ = run(capsys, "equiv", "--a", "1,4,4", "--b", "1,4,5", "--s", "2")
    assert code == 0
    assert out.strip() == "inequivalent"


def test_domain_errors_exit_1(capsys):
    code, _, err = run(capsys, "census", "--a", "0,0", "--s", "2")
    assert code == 1 and err.startswith("ZeroVector:")
    code, _, err = run(capsys, "moves", "--a", "1", "--b", "2")
    assert code == 1 and err.startswith("ParityError:")
    code, _, err = run(capsys, "polytope", "--a", "1,4,4", "--s", "2", "--kappa", "7")
    assert code == 1 and err.startswith("InvalidKappa:")


def test_usage_errors_exit_2(capsys):
    code, _, err = run(capsys, "recognize", "--in", "/nonexistent-polytope.json")
    assert code == 2 and "error:" in err
    with pytest.raises(SystemExit) as exc:
        main(["census", "--a", "1,x", "--s", "2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["unknown-command"])
    assert exc.value.code == 2


def test_output_is_deterministic(capsys):
    first = run(capsys, "census", "--a", "0,0,2", "--s", "2", "--kappa", "5", "--json")
    second = run(capsys, "census", "--a", "0,0,2", "--s", "2", "--kappa", "5", "--json")
    assert first == second


def test_polytope_out_recognize_round_trip(tmp_path, capsys):
    path = tmp_path / "poly.json"
    code, out, _ = run(
        capsys,
        "polytope",
        "--a", "1,4,4",
        "--s", "2",
        "--kappa", "8",
        "--out", str(path),
        "--json",
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["exact_volume"] == "8816/15"
    assert obj["nominal_volume"] == "1600/3"
    stored = json.loads(path.read_text())
    assert stored["dim"] == 5
    code, out, _ = run(capsys, "recognize", "--in", str(path), "--json")
    assert code == 0
    rec = json.loads(out)
    assert len(rec["presentations"]) == 1
    pres = rec["presentations"][0]
    assert pres["r"] == 3 and pres["s"] == 2
    assert pres["a"] == [1, 4, 4] and pres["kappa"] == "8"


def test_polytope_volume_fields(capsys):
    code, out, _ = run(
        capsys, "polytope", "--a", "1", "--s", "2", "--kappa", "1", "--json"
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["exact_volume"] == "28/3"
    assert obj["nominal_volume"] == "9"
    assert len(obj["vertices"]) == 6
    assert obj["delzant"]["ok"] is True
    assert obj["fiber_fingerprint"] == ["2", "4"]


def test_moves_json_replay(capsys):
    code, out, _ = run(capsys, "moves", "--a", "0,0,9", "--b", "3,3,3", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["end"] == [3, 3, 3]
    assert obj["kappa_floor"] >= 8
    assert all(step[0] in ("e1", "e1_inv", "eij", "eij_inv") for step in obj["steps"])


def test_hirzebruch_text(capsys):
    code, out, _ = run(capsys, "hirzebruch", "--a", "0", "--b", "4")
    assert code == 0 and out.startswith("equivalent")
    code, out, _ = run(capsys, "hirzebruch", "--a", "0", "--b", "1")
    assert code == 0 and out.startswith("inequivalent")


def test_family_with_lift(capsys):
    code, out, _ = run(capsys, "family", "--k", "3", "--lift", "2", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["K"] == 11 and obj["a"] == [11, 13]
    assert obj["lift"]["vectors"] == [[0, 0, 11, 13], [0, 3, 5, 16], [0, 1, 8, 15]]
    code, out, _ = run(capsys, "family", "--k", "2")
    assert code == 0
    assert "K = 5" in out and "(2, 7)" in out
