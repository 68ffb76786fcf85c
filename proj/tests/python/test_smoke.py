import json

import pytest

import sncsmooth


def test_registry_lists_the_builtin_inventory():
    names = sncsmooth.list_scenarios()
    assert "tetrahedron" in names
    assert "quadric-pipeline" in names
    assert len(names) >= 30


def test_check_blown_tetrahedron_is_a_k3():
    report = sncsmooth.check("tetra-blown")
    assert report["exit_code"] == 0
    assert report["d_semistable"] is True
    assert report["euler_fiber"] == 24
    assert report["classification"] == "K3"


def test_naive_quadric_plan_is_rejected():
    report = sncsmooth.check("quadric-naive")
    assert report["exit_code"] == 3
    assert any(m["curve"] == "C3" for m in report["mismatch"])


def test_parameter_forwarding():
    assert sncsmooth.check("fujita", k=0)["h0_dim"] == 1
    assert sncsmooth.check("fujita", k=2)["h0_dim"] == 0


def test_scenario_round_trip():
    doc = sncsmooth.scenario("tetrahedron")
    again = sncsmooth.scenario(json.dumps(doc))
    assert doc == again
    assert len(doc["components"]) == 4
    assert len(doc["double_curves"]) == 6
    assert len(doc["triple_points"]) == 4


def test_validate_flags_broken_surfaces():
    doc = sncsmooth.scenario("tetrahedron")
    doc["double_curves"][0]["sides"] = doc["double_curves"][0]["sides"][:1]
    diagnostics = sncsmooth.validate(json.dumps(doc))
    assert any("two sides" in d for d in diagnostics)
    assert sncsmooth.validate("tetrahedron") == []


def test_planner():
    proposal = sncsmooth.plan("tetrahedron")
    assert proposal["feasible"]
    assert sum(s["points"] for s in proposal["steps"]) == 12
    assert sncsmooth.plan("tetra-blown")["steps"] == []


def test_chart_identities_pass():
    results = sncsmooth.charts(samples=10)
    assert len(results) >= 20
    assert all(r["passed"] for r in results)


def test_errors_are_python_exceptions():
    with pytest.raises(sncsmooth.SncError):
        sncsmooth.check("{ not json")
