"""Exhaustive A_sigma-minimizer search over fixed (n, alpha) classes, plus
the shape predicates that test whether a tree is a subdivided skeleton with
pendant attachments."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .canonical import canonical_code, is_isomorphic
from .enumeration import MAX_GRAPH_N, MAX_TREE_N, pool_by_alpha
from .families import attachment_range, rooted_attach, subdivision_graph, t_lp
from .graphs import Graph, end_branch_points, graph6_decode, is_tree, leaves
from .independence import alternating_classification, independence_number
from .spectral import a_sigma_matrix, spectral_radius, validate_sigma

# default sigma sweep: the coarse tenths plus both quarter points
SIGMA_GRID = (0.0, 0.1, 0.2, 0.25, 0.3, 0.4, 0.5, 0.6, 0.7, 0.75, 0.8, 0.9)

DEFAULT_TIE_TOL = 1e-9
_VERIFY_TOL = 1e-12


@dataclass(frozen=True)
class SearchSpace:
    n: int
    alpha: int
    cls: str = "tree"  # tree | connected


@dataclass(frozen=True)
class SearchRecord:
    """Outcome of one exhaustive minimizer search."""

    n: int
    alpha: int
    sigma: float
    cls: str
    min_lambda: float
    tie_tol: float
    minimizers: tuple[str, ...]

    def to_json(self):
        return {
            "n": self.n,
            "alpha": self.alpha,
            "sigma": self.sigma,
            "class": self.cls,
            "min_lambda": self.min_lambda,
            "tie_tol": self.tie_tol,
            "minimizers": list(self.minimizers),
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            n=data["n"],
            alpha=data["alpha"],
            sigma=data["sigma"],
            cls=data["class"],
            min_lambda=data["min_lambda"],
            tie_tol=data["tie_tol"],
            minimizers=tuple(data["minimizers"]),
        )


def _class_cap(cls):
    if cls == "tree":
        return MAX_TREE_N
    if cls == "connected":
        return MAX_GRAPH_N
    raise ValueError(f"unknown class {cls!r}")


def find_minimizers(space, sigma, tie_tol=DEFAULT_TIE_TOL):
    """Scan every graph in the (n, alpha) class and report the minimum
    spectral radius together with all graphs within tie_tol of it.

    Screening goes through batched symmetric eigensolves; anything inside
    the tie window is re-verified at tight tolerance before reporting.
    Graphs whose edge-density lower bound 2m/n already exceeds the
    incumbent are skipped without an eigensolve.
    """
    s = validate_sigma(sigma)
    if tie_tol <= 0:
        raise ValueError("tie_tol must be positive")
    cap = _class_cap(space.cls)
    if not 1 <= space.n <= cap:
        raise ValueError(
            f"{space.cls} search covers 1 <= n <= {cap}, got {space.n}"
        )
    codes = pool_by_alpha(space.cls, space.n, space.alpha)
    if not codes:
        raise ValueError(
            f"no {space.cls} graphs on {space.n} vertices with "
            f"independence number {space.alpha}"
        )

    n = space.n
    window = 1 + tie_tol + 1e-10
    incumbent = math.inf
    kept = []
    for start in range(0, len(codes), 1024):
        chunk = [graph6_decode(c) for c in codes[start : start + 1024]]
        if incumbent < math.inf:
            chunk = [g for g in chunk if 2 * g.m / n <= incumbent * window]
            if not chunk:
                continue
        stack = np.stack([a_sigma_matrix(g, s) for g in chunk])
        lams = np.linalg.eigvalsh(stack)[:, -1]
        low = float(lams.min())
        if low < incumbent:
            incumbent = low
        bar = incumbent * window + 1e-12
        for g, lam in zip(chunk, lams):
            if lam <= bar:
                kept.append((float(lam), g))

    bar = incumbent * window + 1e-12
    refined = [
        (spectral_radius(g, s, tol=_VERIFY_TOL).lam, g)
        for lam, g in kept
        if lam <= bar
    ]
    best = min(lam for lam, _ in refined)
    bar = best * (1 + tie_tol) + (1e-12 if best == 0 else 0)
    mins = sorted(
        canonical_code(g).decode() for lam, g in refined if lam <= bar
    )
    return SearchRecord(
        n=space.n,
        alpha=space.alpha,
        sigma=float(s),
        cls=space.cls,
        min_lambda=best,
        tie_tol=tie_tol,
        minimizers=tuple(mins),
    )


# ---------------------------------------------------------------------------
# shape decomposition: invert "subdivide a skeleton tree, then hang pendants"


@dataclass(frozen=True)
class ShapeWitness:
    skeleton: Graph
    counts: tuple[int, ...]


@dataclass(frozen=True)
class ShapeRejection:
    reason: str


def shape_decompose(g):
    """Strip the leaves of a tree and try to read the remainder as a
    subdivided skeleton, returning the skeleton and per-vertex pendant
    counts, or a rejection naming the failed condition.

    The remainder qualifies when one bipartition class consists entirely
    of degree-2 vertices (the subdivision vertices); the other class is
    the skeleton.
    """
    if not is_tree(g):
        raise ValueError("shape decomposition needs a tree")
    if g.n == 1:
        return ShapeWitness(Graph(1), (0,))
    if g.n == 2:
        return ShapeWitness(Graph(1), (1,))
    lv = set(leaves(g))
    keep = [v for v in range(g.n) if v not in lv]
    if len(keep) == 1:
        return ShapeWitness(Graph(1), (g.n - 1,))

    pos = {v: i for i, v in enumerate(keep)}
    inner = [(pos[u], pos[v]) for u, v in g.edges() if u in pos and v in pos]
    core = Graph(len(keep), inner)

    # unique 2-coloring of the remainder tree
    color = [-1] * core.n
    color[0] = 0
    queue = [0]
    while queue:
        v = queue.pop()
        for w in core.neighbors(v):
            if color[w] < 0:
                color[w] = 1 - color[v]
                queue.append(w)
    classes = ([], [])
    for v in range(core.n):
        classes[color[v]].append(v)
    sub = None
    for side in (0, 1):
        if all(core.degree(v) == 2 for v in classes[side]):
            sub = side
            break
    if sub is None:
        return ShapeRejection("no all-degree-2 partite class")
    skel = classes[1 - sub]

    counts = {v: 0 for v in skel}
    rank = {keep[v]: i for i, v in enumerate(skel)}
    for lf in lv:
        (v,) = g.neighbors(lf)
        if v not in rank:
            return ShapeRejection("pendant edge attaches to a subdivision vertex")
        counts[pos[v]] += 1

    t_edges = []
    for r in classes[sub]:
        a, b = core.neighbors(r)
        t_edges.append((skel.index(a), skel.index(b)))
    skeleton = Graph(len(skel), t_edges)
    witness = ShapeWitness(skeleton, tuple(counts[v] for v in skel))
    rebuilt = rooted_attach(
        subdivision_graph(skeleton), tuple(range(skeleton.n)), witness.counts
    )
    assert is_isomorphic(rebuilt, g)
    return witness


def candidate_tuple(witness):
    """Label a decomposed shape as a star-skeleton or path-skeleton row
    with counts in canonical order."""
    t = witness.skeleton
    if t.n != 4:
        raise ValueError("candidate shapes have 4-vertex skeletons")
    degs = sorted(t.degree(v) for v in range(t.n))
    if degs == [1, 1, 1, 3]:
        center = next(v for v in range(4) if t.degree(v) == 3)
        outer = sorted(witness.counts[v] for v in range(4) if v != center)
        return "t1", tuple(outer) + (witness.counts[center],)
    if degs == [1, 1, 2, 2]:
        end = next(v for v in range(4) if t.degree(v) == 1)
        order = [end]
        while len(order) < 4:
            nxt = [w for w in t.neighbors(order[-1]) if w not in order]
            order.append(nxt[0])
        row = tuple(witness.counts[v] for v in order)
        return "t2", min(row, tuple(reversed(row)))
    raise ValueError("skeleton is neither a 3-star nor a 4-path")


# ---------------------------------------------------------------------------
# structural audit: the six necessary conditions on tree minimizers


@dataclass(frozen=True)
class AuditItem:
    name: str
    passed: bool
    witness: str = ""


def structural_audit(tree, alpha):
    """Check the six structural predicates every tree minimizer in the
    high-independence regime satisfies; returns one item per predicate
    with a witness for each failure."""
    if not is_tree(tree):
        raise ValueError("structural audit needs a tree")
    n = tree.n
    if not (n + 1) // 2 + 2 <= alpha <= n - 2:
        raise ValueError(
            f"alpha={alpha} outside [{(n + 1) // 2 + 2}, {n - 2}] for n={n}"
        )
    lv = set(leaves(tree))
    ebps = end_branch_points(tree)
    items = []

    items.append(
        AuditItem(
            "end_branch_points_min_two",
            len(ebps) >= 2,
            f"end branch points: {sorted(ebps)}",
        )
    )

    bad = []
    for u in ebps:
        have = sum(1 for w in tree.neighbors(u) if w in lv)
        if have != tree.degree(u) - 1:
            bad.append((u, have, tree.degree(u)))
    items.append(
        AuditItem(
            "end_branch_leaf_neighbors",
            not bad,
            f"vertex, leaf neighbors, degree: {bad}" if bad else "",
        )
    )

    cls = None
    if len(ebps) >= 2:
        cls = alternating_classification(tree)
    if cls is None:
        items.append(
            AuditItem(
                "even_spacing_alternating",
                False,
                "requires two end branch points",
            )
        )
    elif not cls.consistent:
        items.append(AuditItem("even_spacing_alternating", False, cls.conflict))
    else:
        mis = cls.leaves | cls.v1star
        indep = all(
            not tree.has_edge(u, v) for u in mis for v in mis if u < v
        )
        ok = indep and len(mis) == alpha
        items.append(
            AuditItem(
                "even_spacing_alternating",
                ok,
                ""
                if ok
                else f"leaves + odd class has size {len(mis)}, alpha {alpha},"
                f" independent: {indep}",
            )
        )

    v1 = cls.v1star if cls is not None and cls.consistent else set()
    v2 = cls.v2star if cls is not None and cls.consistent else set()
    bad = []
    for v in v1 | v2:
        for w in tree.neighbors(v):
            if w in lv:
                if v in v1:
                    bad.append((v, (w,)))
                continue
            if tree.degree(w) != 2:
                continue
            chain = [v, w]
            while tree.degree(chain[-1]) == 2:
                nxt = [x for x in tree.neighbors(chain[-1]) if x != chain[-2]]
                chain.append(nxt[0])
            if chain[-1] in lv:
                bad.append((v, tuple(chain[1:])))
    items.append(
        AuditItem(
            "no_long_pendant_paths",
            cls is not None and cls.consistent and not bad,
            f"pendant paths at: {bad}"
            if bad
            else ("" if cls is not None and cls.consistent else "no alternating classification"),
        )
    )

    bad = []
    for v in v1:
        if tree.degree(v) < 3:
            continue
        for w in tree.neighbors(v):
            hit = [x for x in tree.neighbors(w) if x in lv]
            if hit:
                bad.append((v, w, hit[0]))
    items.append(
        AuditItem(
            "no_leaf_near_odd_branch",
            cls is not None and cls.consistent and not bad,
            f"odd branch, neighbor, leaf: {bad}"
            if bad
            else ("" if cls is not None and cls.consistent else "no alternating classification"),
        )
    )

    need = 2 * alpha - n + 1
    items.append(
        AuditItem(
            "leaf_count_lower_bound",
            len(lv) >= need,
            f"{len(lv)} leaves, need {need}",
        )
    )
    return items


# ---------------------------------------------------------------------------
# per-vertex pendant-count ranges for decomposed candidates


@dataclass(frozen=True)
class RangeItem:
    vertex: int
    degree: int
    count: int
    lo: int
    hi: int
    passed: bool


def attachment_range_check(g, sigma):
    """Decompose g and test every skeleton vertex's pendant count against
    the sigma-regime attachment range."""
    s = validate_sigma(sigma)
    dec = shape_decompose(g)
    if isinstance(dec, ShapeRejection):
        raise ValueError(f"graph does not decompose: {dec.reason}")
    alpha = independence_number(g).alpha
    t, lp = t_lp(g.n, alpha)
    spare = g.n - alpha - 1
    items = []
    for v in range(dec.skeleton.n):
        d = dec.skeleton.degree(v)
        lo, hi = attachment_range(s, t, lp, spare, d)
        c = dec.counts[v]
        items.append(RangeItem(v, d, c, lo, hi, lo <= c <= hi))
    return items
