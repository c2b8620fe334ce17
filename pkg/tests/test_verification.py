import pytest

from asigma import verification as V


def test_registry_covers_all_suites():
    assert len(V.CHECKS) == 32
    assert set(V.SUITES) == {"lemmas", "thm1", "thm2", "thm3", "tables", "all"}
    assert len(V.SUITES["lemmas"]) == 27
    assert set(V.SUITES["all"]) == set(V.CHECKS)
    for ids in V.SUITES.values():
        for cid in ids:
            assert cid in V.CHECKS
    for k in range(1, 22):
        assert f"lemma_2_{k}" in V.CHECKS
    for k in range(5, 10):
        assert f"lemma_5_{k}" in V.CHECKS
    assert "perron_comparison" in V.CHECKS


def test_unknown_ids_raise():
    with pytest.raises(ValueError):
        V.run_check("lemma_9_9")
    with pytest.raises(ValueError):
        V.run_suite("everything")


def test_subdivision_named_instance():
    # the fixed first instance is the long double spider on 13 vertices
    out = V.run_check("lemma_2_7", {"instances": 1})
    assert out.passed
    assert out.margin > 0
    assert "sigma=0.5" in out.witness


def test_complement_edge_budget_exhaustive_part():
    out = V.run_check("lemma_2_19", {"instances": 5})
    assert out.passed
    assert out.margin >= 0
    assert "random instances" in out.witness


def test_perron_comparison_single_instance_modes():
    # balanced counts leave the end host at the maximum degree: vacuous
    out = V.run_check("perron_comparison", {"counts": (2, 1, 1, 2), "sigma": 0.6})
    assert out.passed
    assert "vacuous" in out.witness
    # unbalanced counts satisfy the degree hypotheses on both ends
    out = V.run_check("perron_comparison", {"counts": (1, 2, 2, 2), "sigma": 0.6})
    assert out.passed
    assert out.margin > 0.5
    assert "u1" in out.witness and "u4" in out.witness


def test_failing_check_carries_witness():
    out = V.run_check("lemma_2_11", {"n_max": 4, "tol": 1e-30})
    assert out.passed is False
    assert "closed form" in out.witness


def test_alternating_named_instances():
    out = V.run_check("lemma_2_6", {"instances": 4})
    assert out.passed
    assert "4 alternating instances" in out.witness
    assert out.margin >= 0


def test_ordering_margins_clear_the_floor():
    out = V.run_check("lemma_2_18", {"t_max": 2})
    assert out.passed
    assert out.margin > 10 * V.EIG_TOL


def test_check_is_deterministic_under_seed():
    a = V.run_check("lemma_2_1", {"seed": 5, "instances": 10})
    b = V.run_check("lemma_2_1", {"seed": 5, "instances": 10})
    assert (a.passed, a.witness, a.margin) == (b.passed, b.witness, b.margin)
    c = V.run_check("lemma_2_1", {"seed": 6, "instances": 10})
    assert c.passed


def test_suite_budget_skips_are_reported():
    outs = V.run_suite("tables", budget=1e-9)
    assert [o.check for o in outs] == ["theorem_5_1", "theorem_5_2"]
    assert all(o.passed is None for o in outs)
    assert all("skipped" in o.witness for o in outs)


def test_suite_outcomes_sorted_by_id():
    outs = V.run_suite("thm2")
    assert [o.check for o in outs] == ["theorem_1_2"]
    assert all(o.passed for o in outs)


def test_outcome_json_shape():
    out = V.run_check("lemma_2_18", {"t_max": 1})
    d = out.to_json()
    assert set(d) == {"check", "params", "passed", "witness", "margin"}
    assert d["check"] == "lemma_2_18"
    assert d["params"]["sigmas"] == [0.5, 0.6, 0.7, 0.8, 0.9]
    assert isinstance(d["margin"], float)


def test_degree_bound_skips_lone_hubs():
    # the linear bound needs adjacent max-degree vertices past sigma 1/2
    out = V.run_check("lemma_2_13", {"instances": 60})
    assert out.passed
    assert out.margin >= -V.MARGIN_FLOOR
