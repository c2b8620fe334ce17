import random
from fractions import Fraction

import numpy as np
import pytest

from asigma.graphs import Graph, complement
from asigma.partitions import (
    FACTORIZATION_IDS,
    Partition,
    _swap_bracket,
    charpoly,
    eval_poly,
    factorization_check,
    is_equitable,
    quotient_lambda_check,
    quotient_matrix,
    t1_quotient,
    t2_quotient,
)
from asigma.spectral import spectral_radius
from test_canonical import t1_tree, t2_tree
from test_graphs import F33_EDGES, G1_EDGES, cycle_graph, path_graph


def f33():
    return Graph(6, F33_EDGES)


def g2():
    return complement(Graph(6, G1_EDGES))


# bridge endpoints {2,3} vs the four clique-only vertices
F33_PI2 = Partition(6, [[2, 3], [0, 1, 4, 5]])
G2_PI1 = Partition(6, [[0, 4], [3, 5], [1, 2]])


def t1_partition(a, d):
    # t1_tree labels: center 0, subdivisions 1..3, outer 4..6, then pendants
    outer_p = list(range(7, 7 + 3 * a))
    blocks = [outer_p, [4, 5, 6], [1, 2, 3], [0]]
    if d:
        blocks.append(list(range(7 + 3 * a, 7 + 3 * a + d)))
    return Partition(7 + 3 * a + d, blocks)


def t2_partition(counts):
    # t2_tree labels: skeleton 0,2,4,6 on a 7-path, then pendant groups
    blocks = []
    nxt = 7
    hosts = [0, 2, 4, 6]
    for i, c in enumerate(counts):
        blocks.append(list(range(nxt, nxt + c)))
        nxt += c
        blocks.append([hosts[i]])
        if i < 3:
            blocks.append([hosts[i] + 1])
    return Partition(nxt, blocks)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition(4, [[0, 1], [1, 2, 3]])
    with pytest.raises(ValueError):
        Partition(4, [[0, 1], [2]])
    with pytest.raises(ValueError):
        Partition(3, [[0, 1, 2], []])
    p = Partition(3, [[2, 0], [1]])
    assert p.blocks == ((0, 2), (1,))


def test_is_equitable_examples():
    assert is_equitable(path_graph(3), 0.5, Partition(3, [[0, 2], [1]]))
    assert not is_equitable(path_graph(4), 0.5, Partition(4, [[0, 2], [1, 3]]))
    assert is_equitable(path_graph(4), 0.5, Partition(4, [[0, 3], [1, 2]]))
    assert is_equitable(f33(), 0.3, F33_PI2)
    assert is_equitable(g2(), 0.3, G2_PI1)
    assert is_equitable(cycle_graph(6), 0.0, Partition(6, [range(6)]))


def test_quotient_matrix_f33():
    for s in (0.0, 0.25, 0.5, 0.8):
        w = quotient_matrix(f33(), s, F33_PI2)
        expect = np.array([[1 + 2 * s, 2 - 2 * s], [1 - s, 1 + s]])
        assert np.allclose(w, expect, atol=1e-12)


def test_quotient_matrix_g2():
    for s in (0.0, 0.5, 0.7):
        w = quotient_matrix(g2(), s, G2_PI1)
        expect = np.array(
            [
                [1 + s, 1 - s, 0],
                [1 - s, 3 * s, 2 - 2 * s],
                [0, 2 - 2 * s, 1 + 2 * s],
            ]
        )
        assert np.allclose(w, expect, atol=1e-12)


def test_quotient_matrix_rejects_non_equitable():
    with pytest.raises(ValueError):
        quotient_matrix(path_graph(4), 0.5, Partition(4, [[0, 2], [1, 3]]))


def test_parametric_t1_matches_graph_quotient():
    for a, d in ((3, 2), (4, 1), (2, 5)):
        g = t1_tree(a, a, a, d)
        w = quotient_matrix(g, 0.6, t1_partition(a, d))
        assert np.allclose(w, t1_quotient(0.6, a, d), atol=1e-12)


def test_parametric_t2_matches_graph_quotient():
    for counts in ((2, 1, 1, 2), (3, 2, 4, 1)):
        g = t2_tree(*counts)
        w = quotient_matrix(g, 0.55, t2_partition(counts))
        assert np.allclose(w, t2_quotient(0.55, counts), atol=1e-12)


def test_quotient_lambda_agreement():
    assert quotient_lambda_check(f33(), 0.5, F33_PI2)
    assert abs(spectral_radius(f33(), 0.5).lam - 2.5) < 1e-9
    assert quotient_lambda_check(cycle_graph(6), 0.3, Partition(6, [range(6)]))
    assert quotient_lambda_check(g2(), 0.7, G2_PI1)
    assert quotient_lambda_check(t2_tree(2, 1, 1, 2), 0.6, t2_partition((2, 1, 1, 2)))
    assert quotient_lambda_check(t1_tree(4, 4, 4, 3), 0.8, t1_partition(4, 3))


def test_f33_lambda_closed_form():
    for s in [k / 10 for k in range(10)]:
        lam = spectral_radius(f33(), s).lam
        closed = 1.5 * s + (9 * s * s - 16 * s + 8) ** 0.5 / 2 + 1
        assert abs(lam - closed) < 1e-9


def test_charpoly_examples():
    assert np.allclose(charpoly(np.eye(3)), [1, -3, 3, -1], atol=1e-12)
    for s in (0.0, 0.4, 0.9):
        c2 = charpoly(quotient_matrix(f33(), s, F33_PI2))
        assert np.allclose(c2, [1, -(3 * s + 2), 7 * s - 1], atol=1e-9)
        c3 = charpoly(quotient_matrix(g2(), s, G2_PI1))
        expect = [
            1,
            -(6 * s + 2),
            6 * s * s + 19 * s - 4,
            -(16 * s * s + 7 * s - 5),
        ]
        assert np.allclose(c3, expect, atol=1e-9)


def test_charpoly_input_guards():
    with pytest.raises(ValueError):
        charpoly(np.zeros((2, 3)))
    with pytest.raises(ValueError):
        charpoly(np.eye(13))


def test_charpoly_vanishes_at_largest_eigenvalue():
    mats = [
        quotient_matrix(f33(), 0.5, F33_PI2),
        quotient_matrix(g2(), 0.6, G2_PI1),
        t2_quotient(0.7, (4.0, 3.0, 4.0, 5.0)),
        t1_quotient(0.5, 4.0, 2.0),
    ]
    for m in mats:
        lam = float(np.max(np.linalg.eigvals(m).real))
        assert abs(eval_poly(charpoly(m), lam)) <= 1e-6


def test_factorization_named_samples():
    # half-sigma identity at t=3, x=3 has difference 9 exactly
    assert factorization_check("t1-shift3-half", 0.5, 3, 3.0)
    assert factorization_check("t2-swap23", 0.6, 4, 5.0, tol=1e-8)
    assert factorization_check("t1-shift3", 0.75, 2, 1.5)
    assert factorization_check("t2-swap23-wide", 0.9, 5, 0.3)
    assert factorization_check("t2-tail-shift", 0.55, 6, 4.25)


def test_factorization_random_samples():
    rng = random.Random(31)
    for ident in FACTORIZATION_IDS:
        for _ in range(20):
            s = 0.5 if ident == "t1-shift3-half" else rng.uniform(0.0, 0.99)
            t = rng.randint(1, 10)
            x = rng.uniform(-3.0, 9.0)
            assert factorization_check(ident, s, t, x), (ident, s, t, x)


def test_factorization_guards():
    with pytest.raises(ValueError):
        factorization_check("t1-shift3-half", 0.6, 3, 2.0)
    with pytest.raises(ValueError):
        factorization_check("no-such-identity", 0.5, 3, 2.0)


def test_swap_bracket_roots():
    # the quadratic bracket in the swap identities vanishes at sigma and
    # 2 - 1/sigma
    for s in (Fraction(3, 5), Fraction(7, 10), Fraction(9, 10)):
        assert _swap_bracket(s, s) == 0
        assert _swap_bracket(s, 2 - 1 / s) == 0
