import json

import pytest

from delpezzo.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip().startswith(("{", "[")) else out)


def test_quotient_builtin(capsys):
    code, out = run(capsys, "quotient", "--builtin", "z3xz3")
    assert code == 0
    assert out["k2"] == 1
    assert out["config"] == ["A2", "A2", "A2", "A2"]
    assert out["group_order"] == 9
    assert out["euler_check"]["pass"]


def test_quotient_action_literal(capsys):
    text = json.dumps([{"perm": [0, 1, 2], "scalars": ["0", "1/3", "2/3"]}])
    code, out = run(capsys, "quotient", "--action", text)
    assert code == 0
    assert out["config"] == ["A2", "A2", "A2"]
    assert out["k2"] == 3


def test_quotient_action_file(tmp_path, capsys):
    f = tmp_path / "action.json"
    f.write_text(json.dumps({"generators": [
        {"perm": [0, 1, 2], "scalars": ["1/2", "1/2", "0"]}]}))
    code, out = run(capsys, "quotient", "--action", str(f))
    assert code == 0
    assert (out["k2"], out["config"]) == (8, ["A1"])


def test_quotient_unsupported_exits_1(capsys):
    text = json.dumps([{"perm": [0, 1, 2], "scalars": ["0", "1/3", "1/3"]}])
    code, out = run(capsys, "quotient", "--action", text)
    assert code == 1
    assert "error" in out


def test_quotient_usage_errors(capsys):
    assert main(["quotient"]) == 2
    assert main(["quotient", "--builtin", "nope"]) == 2
    assert main(["quotient", "--action", "not json"]) == 2


def test_classify(capsys):
    code, out = run(capsys, "classify", "--top", "Q")
    assert code == 0
    assert {(s["degree"], s["config"]) for s in out["survivors"]} == {
        (2, "2A1+A3"), (4, "3A1+D4")}


def test_lemma1(capsys):
    code, out = run(capsys, "lemma1")
    assert code == 0
    assert out["impossible_d7"]
    assert [(r["name"], r["d"]) for r in out["rows"]][:2] == [("P2", 9), ("A1", 8)]
    assert all(r["consistency"]["pass"] for r in out["rows"])


def test_mumford_group_pipeline(capsys):
    code, out = run(capsys, "mumford", "--i", "8")
    assert code == 0
    code, out = run(capsys, "group", "--presentation", out["presentation"],
                    "--bound", "10000", "--abelianization")
    assert code == 0
    assert out["order"] == 120
    assert out["abelianization"] == {"torsion": [], "free_rank": 0}


def test_group_stdin_accepts_mumford_json(capsys, monkeypatch):
    import io
    code, out = run(capsys, "mumford", "--i", "6")
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(out)))
    code, out = run(capsys, "group")
    assert code == 0 and out["order"] == 24


def test_group_bound_exceeded(capsys, monkeypatch):
    monkeypatch.setenv("DELPEZZO_COSET_BOUND", "5")
    code, out = run(capsys, "group", "--presentation",
                    "gens=2; rel=1 * 2 * 1 * 2 * 1^-3; rel=1^3 * 2^-5")
    assert code == 1
    assert out["bound"] == 5 and "error" in out


def test_group_hom_count(capsys):
    code, out = run(capsys, "group", "--presentation", "gens=1; rel=1^6",
                    "--hom", "4")
    assert code == 0
    assert out["hom_count"] == {"d": 4, "count": 2}


def test_mumford_out_of_range(capsys):
    assert main(["mumford", "--i", "3"]) == 2


def test_recognize_and_blowdown(capsys):
    from delpezzo.lattice import ii_star_fiber

    fib = ii_star_fiber()
    cfg = json.dumps(fib.remove(fib.index_of("C1")).to_json())
    code, out = run(capsys, "recognize", "--config", cfg)
    assert code == 0 and out["type"] == "E8"

    cfg = json.dumps({"labels": ["E", "C"], "matrix": [[-1, 1], [1, -2]]})
    code, out = run(capsys, "blowdown", "--config", cfg, "--curve", "E")
    assert code == 0 and out["config"]["matrix"] == [[-1]]

    cfg = json.dumps({"labels": ["C"], "matrix": [[-2]]})
    assert main(["blowdown", "--config", cfg, "--curve", "C"]) == 1
    capsys.readouterr()


def test_wps_singular(capsys):
    code, out = run(capsys, "wps", "--poly",
                    "vars X:1 Y:1 Z:2 W:3\nW^2 + Z^3 + X^5*Y + a*X^4*Z",
                    "--param", "a=1", "--singular")
    assert code == 0
    assert out["quasi_homogeneous"] and out["degree"] == 6
    assert out["singular_points"] == [["0", "1", "0", "0"]]


def test_wps_bad_param(capsys):
    assert main(["wps", "--poly", "vars X:1\nX", "--param", "oops"]) == 2


def test_germ(capsys):
    code, out = run(capsys, "germ", "--poly", "vars x:1 y:1\ny^2 + x^3",
                    "--at", "0,0")
    assert code == 0 and out["germ"] == "Cusp"
    assert main(["germ", "--poly", "vars x:1 y:1\ny^2 + x^3", "--at", "1,1"]) == 2


def test_fibers(capsys):
    code, out = run(capsys, "fibers")
    assert code == 0
    assert sorted(map(tuple, out["configs"])) == [("II*", "I1", "I1"), ("II*", "II")]


def test_report(capsys):
    code, out = run(capsys, "report")
    assert code == 0
    assert out["statuses"]["V8"] == "not dominated"


def test_pretty_flag(capsys):
    code = main(["--pretty", "fibers"])
    out = capsys.readouterr().out
    assert code == 0 and out.startswith("{\n")


def test_sorted_keys(capsys):
    code = main(["quotient", "--builtin", "z3"])
    out = capsys.readouterr().out
    keys = list(json.loads(out))
    assert keys == sorted(keys)


def test_usage_error_exit_code():
    assert main([]) == 2
    assert main(["no-such-command"]) == 2
