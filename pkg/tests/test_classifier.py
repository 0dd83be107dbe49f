import pytest

from delpezzo import classifier as C
from delpezzo.lattice import parse_config


def test_lemma1_table_pairs():
    rows = C.lemma1_table()
    pairs = [(r.name, r.d) for r in rows]
    assert pairs == [("P2", 9), ("A1", 8), ("A1+A2", 6), ("A4", 5),
                     ("D5", 4), ("E6", 3), ("E7", 2), ("E8", 1)]
    assert 7 not in {r.d for r in rows}
    assert "7" in C.D7_NOTE


def test_lemma1_consistency():
    for row in C.lemma1_table():
        out = C.consistency(row)
        assert out["pass"], (row.name, out)


def test_lemma1_e8_has_two_surfaces():
    e8 = [r for r in C.lemma1_table() if r.d == 1][0]
    assert set(e8.surfaces) == {"V8", "V8'"}


class TestCoverFilter:
    def test_k2_not_integer(self):
        h = C.CoverHypothesis(C.top_profile("P2"), 2, parse_config("A1"), None)
        v = C.cover_filter(h)
        assert not v.ok and v.reason == C.K2_NOT_INTEGER

    def test_rank_mismatch(self):
        h = C.CoverHypothesis(C.top_profile("P2"), 3, parse_config("A2"), None)
        v = C.cover_filter(h)
        assert not v.ok and v.reason == C.RANK_MISMATCH

    def test_survivor(self):
        cfg = parse_config("3A2")
        assignments = C._assignments(cfg, 3, [])
        assert any(C.cover_filter(C.CoverHypothesis(C.top_profile("P2"), 3, cfg, a)).ok
                   for a in assignments)

    def test_euler_mismatch_a8(self):
        cfg = parse_config("A8")
        # the only assignment: one smooth preimage point of local degree 9
        h = C.CoverHypothesis(C.top_profile("P2"), 9, cfg, ((1,),))
        v = C.cover_filter(h)
        assert not v.ok and v.reason == C.EULER_MISMATCH


def test_admissible_degrees():
    assert C.admissible_degrees(C.top_profile("P2")) == [3, 9]
    assert C.admissible_degrees(C.top_profile("Q")) == [2, 4, 8]
    assert C.admissible_degrees(C.top_profile("E8")) == []


def test_configs_of_rank():
    names = {str(t) for cfg in C.configs_of_rank(2) for t in [cfg]}
    cfgs = {"+".join(str(t) for t in cfg) for cfg in C.configs_of_rank(2)}
    assert cfgs == {"A1+A1", "A2"}
    assert names  # silence the unused helper warning


def test_enumerate_p2():
    out = C.enumerate_quotients("P2")
    survivors = {(s["degree"], s["config"]) for s in out["survivors"]}
    assert survivors == {(3, "3A2"), (9, "4A2")}
    actions = {s["config"]: s.get("action") for s in out["survivors"]}
    assert actions == {"3A2": "z3", "4A2": "z3xz3"}
    tagged = {e["config"]: e["paper_case"]
              for e in out["exclusions"] if e.get("paper_case")}
    assert tagged == {"A8": "1.2"}


def test_enumerate_q():
    out = C.enumerate_quotients("Q")
    survivors = {(s["degree"], s["config"]) for s in out["survivors"]}
    assert survivors == {(2, "2A1+A3"), (4, "3A1+D4")}
    # every degree-8 candidate is excluded; the D6 case by the Euler count
    deg8 = [e for e in out["exclusions"] if e["degree"] == 8]
    assert deg8 and all(e["reason"] in (C.EULER_MISMATCH, C.RANK_MISMATCH,
                                        C.LOCAL_ORDER_UNREALIZABLE,
                                        C.K2_NOT_INTEGER) for e in deg8)
    d6 = [e for e in deg8 if e["config"] == "2A1+D6"]
    assert d6[0]["reason"] == C.EULER_MISMATCH
    assert d6[0]["paper_case"] == "2.3"


def test_other_tops_have_no_survivors():
    for name in ("A4", "D5", "E6", "E7"):
        assert C.enumerate_quotients(name)["survivors"] == []


def test_forced_exclusions_v3():
    out = C.forced_exclusions(C.top_profile("A1+A2"))
    by_degree = {e["degree"]: e for e in out}
    assert set(by_degree) == {2, 3, 6}
    for e in out:
        assert e["reason"] in (C.RANK_MISMATCH, C.LOCAL_ORDER_UNREALIZABLE)
    # joint rank overflow at degree 2: A3 + A5 style forcing
    assert by_degree[2]["forced_rank"] > 9 - 3


def test_min_rank_for_order():
    assert C.min_rank_for_order(2) == 1       # A1
    assert C.min_rank_for_order(8) == 4       # D4 beats A7
    assert C.min_rank_for_order(24) == 6      # E6
    assert C.min_rank_for_order(120) == 8     # E8


def test_forced_point_orders():
    # degree 2 over a point of local order 6: total order must be 12
    options = C.forced_point_orders([6], 2)
    assert options and all(t % 6 == 0 for t in options)
    assert 12 in options


def test_ramification_constraints():
    out = C.ramification_constraints(1)
    assert out["singletons_only"]
    assert [] in out["feasible"]
    assert all(len(m) <= 1 and (not m or m[0][1] == 1) for m in out["feasible"])


def test_report_statuses():
    r = C.theorem1_report()
    assert r["statuses"]["V8"] == "not dominated"
    assert r["statuses"]["V8'"] == "not a quotient; domination open"
    assert r["statuses"]["P2"].startswith("quotient realized")
    assert set(r["cover_analysis"]) >= {"P2", "Q", "V3", "other_tops"}
    v3_tags = [e.get("paper_case") for e in r["cover_analysis"]["V3"]["exclusions"]]
    assert v3_tags == [C.FORCED_CASE_TAGS[2], C.FORCED_CASE_TAGS[3],
                       C.FORCED_CASE_TAGS[6]]
    assert r["assumptions"]


def test_cross_module_check():
    out = C.cross_module_check()
    assert out["pass"]
    assert set(out["builtins"]) == {"z2_cone", "z6", "z3", "z3xz3",
                                    "z4", "quaternion8"}
    for name, entry in out["builtins"].items():
        assert entry["matched"], (name, entry)


def test_unknown_top_rejected():
    with pytest.raises(ValueError):
        C.top_profile("nonsense")
