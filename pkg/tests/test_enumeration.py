"""Stream and oracle checks for the isomorphism-free enumerators."""
import pytest

from asigma.canonical import canonical_code, is_isomorphic
from asigma.enumeration import (
    all_connected_graphs,
    all_trees,
    connected_count_cycle_index,
    connected_count_oracle,
    filter_alpha,
    from_graph6_lines,
    pool_by_alpha,
    tree_count_oracle,
)
from asigma.graphs import Graph, graph6_decode, graph6_encode, is_connected, is_tree
from asigma.independence import independence_number

from test_graphs import path_graph, star_graph
from test_partitions import f33


def test_tree_counts_match_oracle():
    # Pruefer route through n=7, parent-array route at n=9
    for n in range(1, 8):
        assert len(list(all_trees(n))) == tree_count_oracle(n)
    assert len(list(all_trees(9))) == tree_count_oracle(9) == 47


def test_tree_stream_is_isomorphism_free():
    for n in range(1, 11):
        codes = set()
        for g in all_trees(n):
            assert g.n == n
            assert is_tree(g)
            codes.add(canonical_code(g))
        count = sum(1 for _ in all_trees(n))
        assert len(codes) == count


def test_connected_counts_match_both_oracles():
    for n in range(1, 6):
        count = len(list(all_connected_graphs(n)))
        assert count == connected_count_oracle(n)
        assert count == connected_count_cycle_index(n)
    assert len(list(all_connected_graphs(6))) == connected_count_cycle_index(6) == 112
    assert len(list(all_connected_graphs(7))) == connected_count_cycle_index(7) == 853


def test_connected_stream_is_isomorphism_free():
    for n in range(1, 7):
        codes = set()
        count = 0
        for g in all_connected_graphs(n):
            assert g.n == n
            assert is_connected(g)
            codes.add(canonical_code(g))
            count += 1
        assert len(codes) == count


def test_enumeration_caps():
    with pytest.raises(ValueError):
        list(all_trees(22))
    with pytest.raises(ValueError):
        list(all_trees(0))
    with pytest.raises(ValueError):
        list(all_connected_graphs(10))
    with pytest.raises(ValueError):
        tree_count_oracle(11)
    with pytest.raises(ValueError):
        connected_count_oracle(8)


def test_filter_alpha_examples():
    # the three connected graphs on 6 vertices with independence number 2
    # that this project cares about: F_{3,3} sits in the class, K_{3,3}
    # does not
    pool = [canonical_code(g) for g in filter_alpha(all_connected_graphs(6), 2)]
    assert len(pool) == len(set(pool)) == 34
    assert canonical_code(f33()) in pool
    k33 = Graph(6, [(i, 3 + j) for i in range(3) for j in range(3)])
    assert canonical_code(k33) not in pool

    stars = list(filter_alpha(all_trees(8), 7))
    assert len(stars) == 1
    assert is_isomorphic(stars[0], star_graph(8))

    paths = [canonical_code(g) for g in filter_alpha(all_trees(9), 5)]
    assert canonical_code(path_graph(9)) in paths


def test_filter_alpha_partitions_the_class():
    for n in (6, 8):
        total = sum(1 for _ in all_trees(n))
        by_alpha = sum(
            len(list(filter_alpha(all_trees(n), a))) for a in range(1, n + 1)
        )
        assert by_alpha == total


def test_pool_by_alpha_matches_filter():
    for n in (7, 9):
        for a in range(1, n + 1):
            want = sorted(
                canonical_code(g) for g in filter_alpha(all_trees(n), a)
            )
            got = sorted(
                canonical_code(graph6_decode(c))
                for c in pool_by_alpha("tree", n, a)
            )
            assert got == want
    assert len(pool_by_alpha("connected", 6, 2)) == 34
    assert pool_by_alpha("tree", 9, 8) != []
    assert pool_by_alpha("tree", 9, 2) == []


def test_pool_rejects_unknown_class():
    with pytest.raises(ValueError):
        pool_by_alpha("forest", 5, 2)
    with pytest.raises(ValueError):
        pool_by_alpha("tree", 25, 2)


def test_pool_alpha_values_are_right():
    for a in (5, 6, 7):
        for code in pool_by_alpha("tree", 9, a)[:10]:
            g = graph6_decode(code)
            assert independence_number(g).alpha == a


def test_from_graph6_lines_round_trip():
    graphs = [path_graph(5), star_graph(7), f33()]
    lines = [graph6_encode(g) + "\n" for g in graphs]
    lines.insert(1, "\n")
    back = list(from_graph6_lines(lines))
    assert len(back) == 3
    for g, h in zip(graphs, back):
        assert g == h


def test_from_graph6_lines_names_bad_line():
    lines = [graph6_encode(path_graph(4)), "@@!bad", graph6_encode(path_graph(3))]
    with pytest.raises(ValueError, match="line 2"):
        list(from_graph6_lines(lines))
