"""Constructors for the named graph families and the attachment-count
candidate tables for the alpha = n-4 regime."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .graphs import Graph, attach_pendant_paths, complement, is_tree


def path_graph(n):
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n):
    """Star on n vertices, center 0."""
    if n < 1:
        raise ValueError("star needs n >= 1")
    return Graph(n, [(0, i) for i in range(1, n)])


def complete_graph(n):
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a, b):
    """K_{a,b} with the first side labeled 0..a-1."""
    if a < 1 or b < 1:
        raise ValueError("both sides need at least one vertex")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def spider(legs):
    """Paths of the given edge lengths glued at a common center 0."""
    legs = list(legs)
    if not legs or any(ln < 1 for ln in legs):
        raise ValueError("legs must be a nonempty list of lengths >= 1")
    return attach_pendant_paths(Graph(1), 0, legs)


def d_graph(n):
    """Spider with legs (1, 1, n-3): the single-branch-point extremal tree."""
    if n < 4:
        raise ValueError("d_graph needs n >= 4")
    return spider([1, 1, n - 3])


def w_graph(n):
    """Spine path on n-4 vertices with two pendant leaves at each spine end:
    the two-branch-point extremal tree."""
    if n < 6:
        raise ValueError("w_graph needs n >= 6")
    g = attach_pendant_paths(path_graph(n - 4), 0, [1, 1])
    return attach_pendant_paths(g, n - 5, [1, 1])


def f_graph(s, t):
    """Cliques K_s and K_t joined by a single edge."""
    if s < 1 or t < 1:
        raise ValueError("clique sizes must be >= 1")
    edges = [(i, j) for i in range(s) for j in range(i + 1, s)]
    edges += [(s + i, s + j) for i in range(t) for j in range(i + 1, t)]
    edges.append((s - 1, s))
    return Graph(s + t, edges)


# 4-cycle v1 v2 v_i v3 with a pendant path v1 v4 v_j closing onto v_i;
# labels v1..v4 = 0..3, v_i = 4, v_j = 5
G1_EDGES = ((0, 1), (1, 4), (4, 2), (2, 0), (0, 3), (3, 5), (5, 4))


def g1():
    return Graph(6, G1_EDGES)


def g2():
    return complement(g1())


def prism_graph(k=3):
    """Two k-cycles joined by a perfect matching."""
    if k < 3:
        raise ValueError("prism needs cycles of length >= 3")
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(k + i, k + (i + 1) % k) for i in range(k)]
    edges += [(i, k + i) for i in range(k)]
    return Graph(2 * k, edges)


def subdivision_graph(t):
    """Subdivide every edge of a tree once.

    Original vertices keep their labels; one new vertex per edge is
    appended in edge order.
    """
    if not is_tree(t):
        raise ValueError("subdivision_graph requires a tree")
    edges = []
    nxt = t.n
    for u, v in t.edges():
        edges.append((u, nxt))
        edges.append((nxt, v))
        nxt += 1
    return Graph(nxt, edges)


def rooted_attach(g, roots, ells):
    """Attach ells[i] pendant edges at roots[i], new vertices appended
    root by root."""
    roots = list(roots)
    ells = list(ells)
    if len(roots) != len(ells):
        raise ValueError("one attachment count per root")
    if len(set(roots)) != len(roots):
        raise ValueError("roots must be distinct")
    if any(e < 0 for e in ells):
        raise ValueError("attachment counts must be >= 0")
    for v, k in zip(roots, ells):
        if not 0 <= v < g.n:
            raise ValueError(f"root {v} out of range")
        if k:
            g = attach_pendant_paths(g, v, [1] * k)
    return g


def t1_graph(a, b, c, d):
    """Subdivided star on four skeleton vertices with pendant counts
    (a, b, c) at the outer vertices and d at the center.

    Labels: center 0, subdivision vertices 1..3, outer vertices 4..6,
    pendants appended outer-first.
    """
    base = subdivision_graph(star_graph(4))
    return rooted_attach(base, (1, 2, 3, 0), (a, b, c, d))


def t2_graph(a, b, c, d):
    """Subdivided path on four skeleton vertices with pendant counts
    (a, b, c, d) along the path.

    Labels: P_7 with skeleton vertices at 0, 2, 4, 6.
    """
    return rooted_attach(path_graph(7), (0, 2, 4, 6), (a, b, c, d))


_ARITY = {
    "path": 1,
    "cycle": 1,
    "star": 1,
    "complete": 1,
    "complete_bipartite": 2,
    "d_graph": 1,
    "w_graph": 1,
    "f_graph": 2,
    "g1": 0,
    "g2": 0,
    "t1": 4,
    "t2": 4,
}


@dataclass(frozen=True)
class FamilySpec:
    """A named family instance: kind, size parameters, and attachment
    counts where the kind takes them.

    Text form is kind:params or kind:params:counts, e.g. ``t2:2,1,1,2``
    (t1/t2 counts ride in the params slot for brevity) and
    ``rooted_attach:1,2:0,1,0,2`` (spider legs, then one count per
    skeleton vertex in label order).
    """

    kind: str
    params: tuple = ()
    counts: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if any(c < 0 for c in self.counts):
            raise ValueError("attachment counts must be >= 0")
        k = self.kind
        if k in _ARITY:
            if len(self.params) != _ARITY[k]:
                raise ValueError(f"{k} takes {_ARITY[k]} parameters")
            if self.counts:
                raise ValueError(f"{k} takes no separate count group")
            if k in ("t1", "t2") and any(p < 0 for p in self.params):
                raise ValueError("attachment counts must be >= 0")
        elif k == "prism":
            if len(self.params) > 1 or self.counts:
                raise ValueError("prism takes at most one parameter")
        elif k == "subdivision":
            if not self.params or self.counts:
                raise ValueError("subdivision takes spider leg lengths")
        elif k == "rooted_attach":
            if not self.params:
                raise ValueError("rooted_attach takes spider leg lengths")
            if len(self.counts) != 1 + sum(self.params):
                raise ValueError("need one count per skeleton vertex")
        else:
            raise ValueError(f"unknown family kind {k!r}")

    def text(self):
        parts = [self.kind]
        if self.params:
            parts.append(",".join(str(p) for p in self.params))
        if self.counts:
            parts.append(",".join(str(c) for c in self.counts))
        return ":".join(parts)


def parse_family(text):
    """Parse the stable text form back into a FamilySpec."""
    parts = text.strip().split(":")
    if not parts or not parts[0]:
        raise ValueError("empty family spec")
    kind = parts[0]
    groups = []
    for grp in parts[1:]:
        try:
            groups.append(tuple(int(tok) for tok in grp.split(",")))
        except ValueError:
            raise ValueError(f"malformed number group {grp!r} in {text!r}") from None
    if len(groups) > 2:
        raise ValueError("at most two number groups")
    params = groups[0] if groups else ()
    counts = groups[1] if len(groups) > 1 else ()
    return FamilySpec(kind, params, counts)


def build(spec):
    """Materialize a FamilySpec as a Graph with deterministic labels."""
    k, p = spec.kind, spec.params
    if k == "path":
        return path_graph(*p)
    if k == "cycle":
        return cycle_graph(*p)
    if k == "star":
        return star_graph(*p)
    if k == "complete":
        return complete_graph(*p)
    if k == "complete_bipartite":
        return complete_bipartite(*p)
    if k == "d_graph":
        return d_graph(*p)
    if k == "w_graph":
        return w_graph(*p)
    if k == "f_graph":
        return f_graph(*p)
    if k == "g1":
        return g1()
    if k == "g2":
        return g2()
    if k == "prism":
        return prism_graph(*p) if p else prism_graph()
    if k == "subdivision":
        return subdivision_graph(spider(p))
    if k == "rooted_attach":
        base = subdivision_graph(spider(p))
        return rooted_attach(base, range(1 + sum(p)), spec.counts)
    if k == "t1":
        return t1_graph(*p)
    if k == "t2":
        return t2_graph(*p)
    raise ValueError(f"unknown family kind {k!r}")


def t_lp(n, alpha):
    """Quotient and remainder of 2*alpha - n + 1 by n - alpha."""
    if alpha >= n:
        raise ValueError("alpha must be below n")
    return divmod(2 * alpha - n + 1, n - alpha)


def attachment_range(sigma, t, lp, spare, d):
    """Admissible pendant-count range at a skeleton vertex of degree d.

    spare is n - alpha - 1, the slack entering the lower bound when
    lp >= 3. The sigma = 0 regime has no stated range.
    """
    if sigma == 0:
        raise ValueError("no attachment range is stated for sigma = 0")
    if sigma < 0.25:
        lo, hi = 0, math.floor(8 * (t + 5) / 5) - d
    elif sigma < 0.5:
        lo, hi = 0, math.floor((4 - 2 * math.sqrt(2)) * (t + 5)) - 1 - d
    elif lp <= 2:
        lo, hi = t + lp - d, t + 2 - d
    else:
        lo, hi = t + lp - spare - d, t + 3 - d
    return max(0, lo), hi


@dataclass(frozen=True)
class CandidateRow:
    """One admissible attachment tuple for a skeleton shape."""

    shape: str  # t1 | t2
    counts: tuple
    t: int
    lp: int

    def spec(self):
        return FamilySpec(self.shape, self.counts)


# unrefined rows as offsets from t, keyed by lp; t1 tuples are
# (outer, outer, outer, center), t2 tuples run along the path
TABLE_UNREFINED = {
    0: {
        "t1": ((-1, 1, 1, -1), (0, 1, 1, -2), (0, 0, 1, -1), (1, 1, 1, -3)),
        "t2": (
            (-1, 0, 0, 1),
            (0, -1, 0, 1),
            (0, 0, -1, 1),
            (0, 0, 0, 0),
            (1, -2, 0, 1),
            (1, -1, -1, 1),
        ),
    },
    1: {
        "t1": ((0, 1, 1, -1), (1, 1, 1, -2)),
        "t2": ((0, 0, 0, 1), (1, -1, 0, 1)),
    },
    2: {
        "t1": ((1, 1, 1, -1),),
        "t2": ((1, 0, 0, 1),),
    },
    3: {
        "t1": (
            (-1, 2, 2, 0),
            (0, 2, 2, -1),
            (0, 1, 2, 0),
            (1, 2, 2, -2),
            (1, 1, 2, -1),
            (1, 1, 1, 0),
            (2, 2, 2, -3),
        ),
        "t2": (
            (-1, 1, 1, 2),
            (0, 0, 1, 2),
            (0, 1, 0, 2),
            (0, 1, 1, 1),
            (1, 1, -1, 2),
            (1, -1, 1, 2),
            (1, 0, 0, 2),
            (1, 0, 1, 1),
            (2, -2, 1, 2),
            (2, -1, 0, 2),
        ),
    },
}

# survivors of the pairwise spectral comparisons, valid for t >= 3
TABLE_REFINED = {
    0: {
        "t1": ((0, 1, 1, -2), (0, 0, 1, -1), (1, 1, 1, -3)),
        "t2": ((0, 0, -1, 1), (1, -1, -1, 1)),
    },
    1: {
        "t1": ((0, 1, 1, -1), (1, 1, 1, -2)),
        "t2": ((0, 0, 0, 1), (1, -1, 0, 1)),
    },
    2: {
        "t1": ((1, 1, 1, -1),),
        "t2": ((1, 0, 0, 1),),
    },
    3: {
        "t1": ((1, 2, 2, -2), (1, 1, 2, -1), (2, 2, 2, -3)),
        "t2": ((1, 1, -1, 2), (1, 0, 0, 2), (2, -1, 0, 2)),
    },
}

# per-n survivors for the small-t regime, settled by direct computation
TABLE_SMALL = {
    12: {"t1": (), "t2": ((2, 0, 1, 2),)},
    13: {"t1": ((2, 2, 2, 0),), "t2": ((2, 1, 1, 2),)},
    14: {
        "t1": ((2, 2, 3, 0), (2, 2, 2, 1)),
        "t2": ((2, 2, 0, 3), (2, 1, 1, 3), (3, 0, 1, 3)),
    },
    15: {"t1": ((2, 3, 3, 0), (2, 2, 3, 1)), "t2": ((2, 2, 1, 3), (3, 1, 1, 3))},
    16: {"t1": ((2, 3, 3, 1), (3, 3, 3, 0)), "t2": ((2, 2, 2, 3), (3, 1, 2, 3))},
    17: {"t1": ((3, 3, 3, 1),), "t2": ((3, 2, 2, 3),)},
    18: {
        "t1": ((3, 4, 4, 0), (3, 3, 4, 1), (3, 3, 3, 2)),
        "t2": ((3, 3, 1, 4), (3, 2, 2, 4), (4, 1, 2, 4)),
    },
}

_T1_DEGREES = (1, 1, 1, 3)
_T2_DEGREES = (1, 2, 2, 1)


def canonical_counts(shape, counts):
    """Symmetry-reduced form: sorted outer counts for t1, lexicographic
    minimum of the tuple and its reversal for t2."""
    counts = tuple(counts)
    if shape == "t1":
        return tuple(sorted(counts[:3])) + counts[3:]
    return min(counts, counts[::-1])


def _instantiate(table, t, lp):
    rows = []
    for shape in ("t1", "t2"):
        for offs in table[lp][shape]:
            counts = tuple(t + o for o in offs)
            if all(c >= 0 for c in counts):
                rows.append(CandidateRow(shape, counts, t, lp))
    return rows


def _enumerate_rows(n, t, lp):
    # direct sweep of the sigma >= 1/2 ranges under the total-count
    # constraint, then symmetry reduction
    alpha = n - 4
    spare = n - alpha - 1
    total = 2 * alpha - n + 1
    rows = []
    for shape, degs in (("t1", _T1_DEGREES), ("t2", _T2_DEGREES)):
        ranges = [attachment_range(0.5, t, lp, spare, d) for d in degs]
        seen = set()
        for c0 in range(ranges[0][0], ranges[0][1] + 1):
            for c1 in range(ranges[1][0], ranges[1][1] + 1):
                for c2 in range(ranges[2][0], ranges[2][1] + 1):
                    c3 = total - c0 - c1 - c2
                    if not ranges[3][0] <= c3 <= ranges[3][1]:
                        continue
                    key = canonical_counts(shape, (c0, c1, c2, c3))
                    if key not in seen:
                        seen.add(key)
                        rows.append(CandidateRow(shape, key, t, lp))
    return rows


def candidate_rows(n, refined=False):
    """Admissible attachment tuples for the alpha = n-4 regime.

    Unrefined rows are regenerated from the attachment ranges; refined
    rows are the stored survivor tables (per-n below t=3).
    """
    if n < 12:
        raise ValueError("candidate tables start at n = 12")
    t, lp = t_lp(n, n - 4)
    if not refined:
        rows = _enumerate_rows(n, t, lp)
    elif t <= 2:
        if n not in TABLE_SMALL:
            raise ValueError(f"no stored small-t table for n = {n}")
        rows = [
            CandidateRow(shape, counts, t, lp)
            for shape in ("t1", "t2")
            for counts in TABLE_SMALL[n][shape]
        ]
    else:
        rows = _instantiate(TABLE_REFINED, t, lp)
    return sorted(rows, key=lambda r: (r.shape, r.counts))
