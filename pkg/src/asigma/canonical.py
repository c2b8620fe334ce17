"""Canonical labeling and isomorphism testing for graphs on at most 64 vertices.

Trees take a centroid-rooted subtree-encoding fast path. Everything else
goes through iterative neighborhood refinement with individualization and
backtracking, pruned by discovered automorphisms.
"""
from __future__ import annotations

from .graphs import Graph, graph6_encode, is_tree

_MAX_AUTOS = 64


def _degree_cells(g: Graph) -> list[list[int]]:
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.degree(v), []).append(v)
    return [groups[d] for d in sorted(groups)]


def _refine(bits: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Split cells by neighbor counts into each cell until stable.

    Splitters are scanned in partition order and fragments are appended in
    ascending count order, so the result depends only on the isomorphism
    type of (graph, ordered partition).
    """
    while True:
        for sp in cells:
            mask = 0
            for v in sp:
                mask |= 1 << v
            out: list[list[int]] = []
            split = False
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((bits[v] & mask).bit_count(), []).append(v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    split = True
                    for k in sorted(groups):
                        out.append(groups[k])
            if split:
                cells = out
                break
        else:
            return cells


def _canon_general(g: Graph) -> list[int]:
    """Permutation old->new whose image is the canonical labeled graph."""
    n, bits = g.n, g.bits
    best_key: tuple[int, ...] | None = None
    best_perm: list[int] | None = None
    autos: list[tuple[int, ...]] = []

    def leaf_key(perm: list[int]) -> tuple[int, ...]:
        inv = [0] * n
        for v, p in enumerate(perm):
            inv[p] = v
        cols = []
        for j in range(1, n):
            row = bits[inv[j]]
            c = 0
            for i in range(j):
                c = c << 1 | (row >> inv[i] & 1)
            cols.append(c)
        return tuple(cols)

    def descend(cells: list[list[int]], fixed: list[int]) -> None:
        nonlocal best_key, best_perm
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                break
        else:
            perm = [0] * n
            for pos, c in enumerate(cells):
                perm[c[0]] = pos
            key = leaf_key(perm)
            if best_key is None or key < best_key:
                best_key, best_perm = key, perm
            elif key == best_key and len(autos) < _MAX_AUTOS:
                inv = [0] * n
                for v, p in enumerate(perm):
                    inv[p] = v
                sigma = tuple(inv[best_perm[v]] for v in range(n))
                autos.append(sigma)
                autos.append(tuple(sorted(range(n), key=lambda v: sigma[v])))
            return
        tried: set[int] = set()
        for v in cell:
            if any(
                s[v] in tried and all(s[w] == w for w in fixed) for s in autos
            ):
                continue
            rest = [w for w in cell if w != v]
            new_cells = cells[:idx] + [[v], rest] + cells[idx + 1 :]
            descend(_refine(bits, new_cells), fixed + [v])
            tried.add(v)

    descend(_refine(bits, _degree_cells(g)), [])
    assert best_perm is not None
    return best_perm


def _rooted_form(t: Graph, root: int, parent: int) -> str:
    kids = sorted(_rooted_form(t, u, root) for u in t.neighbors(root) if u != parent)
    return "(" + "".join(kids) + ")"


def _centroids(t: Graph) -> list[int]:
    n = t.n
    parent = [-1] * n
    order = []
    stack = [0]
    parent[0] = 0
    while stack:
        v = stack.pop()
        order.append(v)
        for u in t.neighbors(v):
            if parent[u] < 0:
                parent[u] = v
                stack.append(u)
    size = [1] * n
    for v in reversed(order[1:]):
        size[parent[v]] += size[v]
    out = []
    for v in range(n):
        comps = [size[u] for u in t.neighbors(v) if parent[u] == v]
        if v != 0:
            comps.append(n - size[v])
        if max(comps) <= n // 2:
            out.append(v)
    return out


def _rebuild_tree(form: str) -> tuple[int, list[tuple[int, int]], list[int]]:
    """Preorder-labeled tree from a parenthesis form; returns (n, edges, roots)."""
    edges = []
    roots = []
    stack: list[int] = []
    nxt = 0
    for ch in form:
        if ch == "(":
            if stack:
                edges.append((stack[-1], nxt))
            else:
                roots.append(nxt)
            stack.append(nxt)
            nxt += 1
        else:
            stack.pop()
    return nxt, edges, roots


def _tree_canonical(t: Graph) -> Graph:
    if t.n == 1:
        return t
    cents = _centroids(t)
    if len(cents) == 1:
        form = _rooted_form(t, cents[0], -1)
        nverts, edges, _ = _rebuild_tree(form)
    else:
        a, b = cents
        fa = _rooted_form(t, a, b)
        fb = _rooted_form(t, b, a)
        if fb < fa:
            fa, fb = fb, fa
        nverts, edges, roots = _rebuild_tree(fa + fb)
        edges.append((roots[0], roots[1]))
    return Graph(nverts, edges)


def canonical_form(g: Graph) -> Graph:
    """The canonical representative of g's isomorphism class."""
    if is_tree(g):
        return _tree_canonical(g)
    return g.relabel(_canon_general(g))


def canonical_code(g: Graph) -> bytes:
    """graph6 bytes of the canonical form; equal codes iff isomorphic."""
    return graph6_encode(canonical_form(g)).encode("ascii")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_code(g) == canonical_code(h)
