import json
from fractions import Fraction

import pytest

import quadric as q

FULL = """genus 2
dL 3
degrees 1 0
* *
* *
"""


def test_walls_and_chambers():
    p = q.ModuliParams(n=2, d=2, dL=6)
    assert p.feasible()
    assert q.alpha_extremes(p) == (Fraction(-1), Fraction(1))
    walls = q.enumerate_critical_values(p)
    assert [w.value for w in walls] == [-1, 0, 1]
    assert "top" in walls[-1].forms
    assert q.chambers(p) == [(None, -1), (-1, 0), (0, 1)]
    assert q.chamber_samples(0, 1) == [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)]


def test_rank_bounds():
    assert q.degree_window(3, 4, 1, 1) == (3, 4)
    assert q.minimum_gamma_rank(q.ModuliParams(n=3, d=4, dL=4), 0) == 2
    with pytest.raises(q.RankOutOfRange):
        q.degree_window(3, 4, 1, 4)
    with pytest.raises(q.InfeasibleParams):
        q.enumerate_critical_values(q.ModuliParams(n=2, d=9, dL=6))


def test_classify():
    b = q.PatternQuadricBundle.from_spec(FULL)
    assert b == q.PatternQuadricBundle([1, 0], [[True, True], [True, True]], 3)
    assert q.classify(b, -1)["class"] == "stable"
    v = q.classify(b, Fraction(0))
    assert v["class"] == "strictly_semistable"
    assert v["witnesses"][0] == {"subobject": "{1}", "clause": "1a", "slack": 0, "decomposes": False}
    assert q.classify(b, "1/2")["class"] == "unstable"
    assert not q.is_alpha_independent(b)
    assert q.generic_rank(b) == 2
    assert not q.underlying_bundle_semistable(b)

    hyp = q.PatternQuadricBundle([1, 1], [[False, True], [True, False]], 2)
    assert q.classify(hyp, Fraction(1, 2))["class"] == "polystable"
    assert q.is_alpha_independent(hyp)


def test_invalid_bundle():
    with pytest.raises(q.InvalidBundle):
        q.PatternQuadricBundle([1, 0], [[True, False], [True, True]], 3)
    with pytest.raises(q.QuadricError):
        q.PatternQuadricBundle.from_spec("genus 2\ndL 3\ndegrees 1 0\n* *\n")


def test_rank2():
    assert q.rank2_walls(1, 3) == [0, Fraction(1, 2)]
    assert q.expected_dimension(3, 1, 6) == 17
    assert q.flip_codim_bound(5) == 4
    assert q.connectedness_verdict(2, 0, 3, 0) == "connected_nonempty"
    with pytest.raises(q.MaximalDegree):
        q.rank2_walls(3, 3)


def test_reports_are_documents():
    doc = q.higgs_report("sp", 2, 3, 2)
    assert set(doc) == {"tool_version", "command", "inputs", "results", "citations", "seed"}
    assert doc["results"]["connected"]["value"] is True
    assert q.geometry_report(4, 0, 8)["results"]["betti"]["value"] == [0, 2, 8]
    assert q.maxdeg_report(3, 2, 2)["results"]["component_lower_bound"]["value"] == 32
    with pytest.raises(q.NonIntegralDegree):
        q.maxdeg_report(3, 3, 2)
    r = q.rank2_report(2, 2, 6, alpha=Fraction(0), seed=3)
    assert r["seed"] == 3
    chk = q.check_report(q.PatternQuadricBundle.from_spec(FULL))
    assert any(x["wall"]["num"] == 0 for x in chk["results"]["wall_crossings"])


def test_sweep_deterministic():
    a = q.sweep(2, 2, 4, seed=1)
    assert a["results"]["total_violations"] == 0
    assert json.dumps(a, sort_keys=True) == json.dumps(q.sweep(2, 2, 4, seed=1), sort_keys=True)
    with pytest.raises(q.GridTooLarge):
        q.sweep(8, 9, 6)
