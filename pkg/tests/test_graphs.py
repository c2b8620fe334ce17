"""Core graph type, surgeries, and graph6 round-trips."""
from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from asigma.graphs import (
    Graph,
    attach_pendant_paths,
    branch_points,
    complement,
    distances,
    end_branch_points,
    graph6_decode,
    graph6_encode,
    internal_edges,
    is_connected,
    is_tree,
    leaves,
    new_graph,
    shift_neighbors,
    subdivide_edge,
    tree_path,
)


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n):
    return Graph(n, [(0, i) for i in range(1, n)])


def spider(legs):
    return attach_pendant_paths(Graph(1), 0, legs)


def w_graph(n):
    # spine path on n-4 vertices, two pendant leaves at each spine end
    g = path_graph(n - 4)
    g = attach_pendant_paths(g, 0, [1, 1])
    return attach_pendant_paths(g, n - 5, [1, 1])


F33_EDGES = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)]
G1_EDGES = [(0, 1), (1, 4), (4, 2), (2, 0), (0, 3), (3, 5), (5, 4)]


@st.composite
def graphs(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if pairs:
        chosen = draw(st.lists(st.sampled_from(pairs), unique=True))
    else:
        chosen = []
    return Graph(n, chosen)


def test_new_graph_basic():
    g = new_graph(1, [])
    assert g.n == 1 and g.m == 0
    f = new_graph(6, F33_EDGES)
    assert f.m == 7
    assert max(f.degrees()) == 3
    p4 = new_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert p4.degrees() == (1, 2, 2, 1)


def test_new_graph_rejects_bad_input():
    with pytest.raises(ValueError):
        new_graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        new_graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        new_graph(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        new_graph(0, [])
    with pytest.raises(ValueError):
        new_graph(65, [])


def test_is_connected():
    assert is_connected(path_graph(5))
    assert not is_connected(Graph(4, [(0, 1), (2, 3)]))
    assert is_connected(complement(Graph(6, G1_EDGES)))
    assert not is_connected(Graph(2))


def test_complement():
    k4 = Graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    assert complement(k4).m == 0
    g2 = complement(Graph(6, G1_EDGES))
    assert g2.m == 8
    # C_5 is self-complementary: complement is again 2-regular and connected
    cc = complement(cycle_graph(5))
    assert cc.degrees() == (2, 2, 2, 2, 2) and is_connected(cc)


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g
    assert g.m + complement(g).m == g.n * (g.n - 1) // 2


def test_leaves_and_branch_points():
    p6 = path_graph(6)
    assert leaves(p6) == [0, 5]
    assert branch_points(p6) == []
    k15 = star_graph(6)
    assert leaves(k15) == [1, 2, 3, 4, 5]
    assert branch_points(k15) == [0]
    d10 = spider([1, 1, 7])
    assert len(leaves(d10)) == 3
    assert branch_points(d10) == [0]
    with pytest.raises(ValueError):
        branch_points(cycle_graph(4))


def test_end_branch_points():
    assert end_branch_points(spider([1, 1, 7])) == [0]
    assert end_branch_points(path_graph(9)) == []
    w11 = w_graph(11)
    assert end_branch_points(w11) == [0, 6]
    # middle branch point on the path joining the outer two is excluded
    g = path_graph(5)
    for v in (0, 2, 4):
        g = attach_pendant_paths(g, v, [1, 1])
    assert branch_points(g) == [0, 2, 4]
    assert end_branch_points(g) == [0, 4]


def test_tree_path():
    w11 = w_graph(11)
    assert tree_path(w11, 7, 9) == [7, 0, 1, 2, 3, 4, 5, 6, 9]
    assert tree_path(w11, 3, 3) == [3]


def test_internal_edges():
    w11 = w_graph(11)
    assert internal_edges(w11) == [(i, i + 1) for i in range(6)]
    assert internal_edges(star_graph(5)) == []
    assert internal_edges(cycle_graph(6)) == []
    two_stars = Graph(9, [(0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7), (0, 8), (8, 1)])
    assert internal_edges(two_stars) == [(0, 8), (1, 8)]
    # cycle hanging at a single branch vertex is a closed walk, not a path
    balloon = Graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (0, 4)])
    assert internal_edges(balloon) == []
    # adjacent branch points form a one-edge internal path
    hh = Graph(8, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (0, 6), (6, 7)])
    assert internal_edges(hh) == [(0, 1)]


def test_subdivide_edge():
    c8 = subdivide_edge(cycle_graph(6), (0, 1), 2)
    assert c8.n == 8 and c8.m == 8
    assert c8.degrees() == (2,) * 8 and is_connected(c8)
    with pytest.raises(ValueError):
        subdivide_edge(path_graph(4), (0, 2))
    with pytest.raises(ValueError):
        subdivide_edge(path_graph(4), (0, 1), 0)


@given(graphs(min_n=2), st.integers(1, 3), st.data())
def test_subdivide_edge_growth(g, times, data):
    edges = g.edges()
    if not edges or g.n + times > 64:
        return
    e = data.draw(st.sampled_from(edges))
    h = subdivide_edge(g, e, times)
    assert h.n == g.n + times and h.m == g.m + times
    assert is_connected(h) == is_connected(g)


def test_shift_neighbors():
    p4 = path_graph(4)
    star = shift_neighbors(p4, 2, 0, [3])
    assert sorted(star.edges()) == [(0, 1), (0, 3), (1, 2)]
    assert star.m == p4.m
    # inverse shift restores the original labeled graph
    back = shift_neighbors(star, 0, 2, [3])
    assert back == p4
    with pytest.raises(ValueError):
        shift_neighbors(p4, 2, 0, [])
    with pytest.raises(ValueError):
        shift_neighbors(p4, 2, 0, [1])  # 1 is already a neighbor of 0


def test_attach_pendant_paths():
    p7 = attach_pendant_paths(Graph(1), 0, [6])
    assert sorted(p7.degrees()) == [1, 1, 2, 2, 2, 2, 2] and is_tree(p7)
    d10 = spider([1, 1, 7])
    assert d10.n == 10 and sorted(d10.degrees()) == [1, 1, 1] + [2] * 6 + [3]
    with pytest.raises(ValueError):
        attach_pendant_paths(path_graph(3), 5, [1])
    with pytest.raises(ValueError):
        attach_pendant_paths(path_graph(3), 0, [0])


def test_distances():
    w11 = w_graph(11)
    d = distances(w11, 7)
    assert d[7] == 0 and d[0] == 1 and d[8] == 2 and d[10] == 8
    assert distances(Graph(3, [(0, 1)]), 0)[2] == -1


def test_graph6_known_vectors():
    assert graph6_encode(Graph(1)) == "@"
    assert graph6_encode(Graph(2, [(0, 1)])) == "A_"
    assert graph6_encode(path_graph(3)) == "Bg"
    assert graph6_encode(Graph(3, [(0, 1), (0, 2), (1, 2)])) == "Bw"
    assert graph6_encode(path_graph(4)) == "Ch"
    assert graph6_encode(cycle_graph(5)) == "Dhc"


def test_graph6_decode_errors():
    with pytest.raises(ValueError):
        graph6_decode("")
    with pytest.raises(ValueError):
        graph6_decode("C")  # missing payload
    with pytest.raises(ValueError):
        graph6_decode("Chh")  # extra payload
    with pytest.raises(ValueError):
        graph6_decode("A" + chr(30))
    with pytest.raises(ValueError):
        graph6_decode("?")  # zero vertices
    with pytest.raises(ValueError):
        graph6_decode("~~????_")


def test_graph6_long_form():
    g = Graph(63, [(0, 62), (10, 20)])
    s = graph6_encode(g)
    assert s.startswith("~")
    assert graph6_decode(s) == g
    g64 = path_graph(64)
    assert graph6_decode(graph6_encode(g64)) == g64


@given(graphs(max_n=12))
def test_graph6_round_trip(g):
    assert graph6_decode(graph6_encode(g)) == g


@given(graphs(min_n=2, max_n=9))
def test_graph6_matches_networkx(g):
    nx = pytest.importorskip("networkx")
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    want = nx.to_graph6_bytes(h, header=False).decode().strip()
    assert graph6_encode(g) == want
