"""Acceptance gate: one test per criterion, each with its stated scope,
tolerance, and runtime budget.  These are the slow, end-to-end runs; the
per-module tests hold the fast edge cases."""
import math
import random
import time

import numpy as np

from asigma.enumeration import (
    all_connected_graphs,
    all_trees,
    connected_count_oracle,
    tree_count_oracle,
)
from asigma.families import f_graph, g2, t1_graph, t2_graph
from asigma.partitions import (
    FACTORIZATION_IDS,
    Partition,
    factorization_check,
    quotient_lambda_check,
    t1_quotient,
    t2_quotient,
)
from asigma.search import SIGMA_GRID
from asigma.spectral import spectral_radius
from asigma.verification import EIG_TOL, run_check


def _timed(check_id, params, budget):
    start = time.monotonic()
    out = run_check(check_id, params)
    elapsed = time.monotonic() - start
    assert out.passed, f"{check_id} failed: {out.witness}"
    assert elapsed < budget, f"{check_id} took {elapsed:.0f}s, budget {budget}s"
    return out, elapsed


def test_criterion_01_high_alpha_connected_minimizers_are_trees():
    _, elapsed = _timed(
        "theorem_1_1",
        {"n_lo": 5, "n_hi": 9, "sigmas": (0.0, 0.25, 0.5, 0.75), "tie_tol": 1e-9},
        600,
    )
    print(f"criterion 1 PASS ({elapsed:.0f}s)")


def test_criterion_02_midpoint_plus_one_double_spiders():
    _, elapsed = _timed(
        "theorem_1_2", {"n_lo": 9, "n_hi": 14, "sigmas": SIGMA_GRID}, 300
    )
    print(f"criterion 2 PASS ({elapsed:.0f}s)")


def test_criterion_03_six_vertex_alpha_two_class():
    _, elapsed = _timed(
        "theorem_5_2",
        {"sigmas": tuple(k / 10 for k in range(10)), "tol": 1e-9},
        60,
    )
    print(f"criterion 3 PASS ({elapsed:.0f}s)")


def test_criterion_04_candidate_tables_cover_minimizers():
    _, elapsed = _timed(
        "theorem_5_1",
        {"n_lo": 12, "n_hi": 21, "sigmas": (0.5, 0.6, 0.75, 0.9), "with_n11": True},
        1800,
    )
    print(f"criterion 4 PASS ({elapsed:.0f}s)")


def test_criterion_05_pendant_attachment_identity():
    out, _ = _timed("lemma_2_9", {"instances": 50, "tol": 1e-8}, 120)
    assert out.margin >= 0
    print("criterion 5 PASS")


def test_criterion_06_path_radius_closed_form():
    from asigma.families import path_graph

    for n in range(2, 51):
        lam = spectral_radius(path_graph(n), 0.0, tol=1e-12).lam
        assert abs(lam - 2 * math.cos(math.pi / (n + 1))) <= 1e-9, f"n={n}"
    print("criterion 6 PASS")


def test_criterion_07_displayed_quotients_share_lambda():
    sigmas = (0.5, 0.6, 0.7, 0.8, 0.9)
    for s in sigmas:
        for t in range(3, 9):
            for outer, center in ((t + 1, t), (t + 2, t - 3)):
                lam_q = float(np.max(np.linalg.eigvals(t1_quotient(s, outer, center)).real))
                lam = spectral_radius(t1_graph(outer, outer, outer, center), s).lam
                assert abs(lam_q - lam) <= 1e-8, f"t1 {outer},{center} s={s}"
            for counts in (
                (t, t - 1, t, t + 1),
                (t, t, t - 1, t + 1),
                (t + 1, t - 1, t + 1, t + 2),
                (t + 1, t + 1, t - 1, t + 2),
                (t + 1, t, t + 1, t + 1),
                (t + 1, t, t, t + 2),
            ):
                lam_q = float(np.max(np.linalg.eigvals(t2_quotient(s, counts)).real))
                lam = spectral_radius(t2_graph(*counts), s).lam
                assert abs(lam_q - lam) <= 1e-8, f"t2 {counts} s={s}"
        assert quotient_lambda_check(g2(), s, Partition(6, [[0, 4], [3, 5], [1, 2]]))
        assert quotient_lambda_check(
            f_graph(3, 3), s, Partition(6, [[2, 3], [0, 1, 4, 5]])
        )
    print("criterion 7 PASS")


def test_criterion_08_factorization_identities_sampled():
    rng = random.Random(8)
    for ident in FACTORIZATION_IDS:
        for _ in range(100):
            s = 0.5 if ident == "t1-shift3-half" else rng.random() * 0.95
            t = rng.randint(1, 10)
            x = rng.uniform(-3.0, 9.0)
            assert factorization_check(ident, s, t, x, tol=1e-7), (
                f"{ident} at sigma={s!r} t={t} x={x!r}"
            )
    print("criterion 8 PASS")


def test_criterion_09_property_suites():
    strict = {"lemma_2_1", "lemma_2_2", "lemma_2_3", "lemma_2_16", "lemma_2_18"}
    for check_id in (
        "lemma_2_1",
        "lemma_2_2",
        "lemma_2_3",
        "lemma_2_7",
        "lemma_2_8",
        "lemma_2_16",
        "lemma_2_18",
        "lemma_2_20",
    ):
        out = run_check(check_id)
        assert out.passed, f"{check_id} failed: {out.witness}"
        if check_id in strict:
            assert out.margin >= 10 * EIG_TOL, f"{check_id} margin {out.margin}"
    print("criterion 9 PASS")


def test_criterion_10_enumeration_counts_vs_oracles():
    tree_counts = [sum(1 for _ in all_trees(n)) for n in range(1, 11)]
    assert tree_counts == [tree_count_oracle(n) for n in range(1, 11)]
    assert tree_counts == [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]
    conn_counts = [sum(1 for _ in all_connected_graphs(n)) for n in range(1, 8)]
    assert conn_counts == [connected_count_oracle(n) for n in range(1, 8)]
    assert conn_counts == [1, 1, 2, 6, 21, 112, 853]
    print("criterion 10 PASS")
