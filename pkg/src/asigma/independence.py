"""Exact independence numbers, leaf-containing maximum independent sets,
and the odd/even classification of non-leaves along end-branch-point paths."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, end_branch_points, is_tree, leaves, tree_path


@dataclass(frozen=True)
class IndependenceCertificate:
    """Exact independence number together with a witness set."""

    alpha: int
    witness: frozenset[int]


@dataclass(frozen=True)
class AlternatingClassification:
    """Non-leaf split (V1*, V2*) by path-position parity, plus the leaves.

    consistent is False when the tree violates the expected structure; the
    conflict string then says which check failed.
    """

    v1star: frozenset[int]
    v2star: frozenset[int]
    leaves: frozenset[int]
    consistent: bool
    conflict: str | None = None


def _clique_cover_bound(bits: tuple[int, ...], avail: int) -> int:
    """Number of cliques in a greedy cover of avail; upper-bounds the MIS size."""
    count = 0
    while avail:
        v = (avail & -avail).bit_length() - 1
        avail &= ~(1 << v)
        cand = bits[v] & avail
        while cand:
            u = (cand & -cand).bit_length() - 1
            avail &= ~(1 << u)
            cand &= bits[u] & avail
        count += 1
    return count


def _mis_mask(bits: tuple[int, ...], avail: int) -> tuple[int, int]:
    """Exact maximum independent set inside avail as (size, vertex mask)."""
    best_size = 0
    best_mask = 0

    def rec(avail: int, cur_mask: int, cur_size: int) -> None:
        nonlocal best_size, best_mask
        pick = -1
        while avail:
            # vertices of available degree <= 1 are always safe to take
            min_v, min_d = -1, 99
            scan = avail
            while scan:
                v = (scan & -scan).bit_length() - 1
                scan &= scan - 1
                d = (bits[v] & avail).bit_count()
                if d < min_d:
                    min_v, min_d = v, d
                    if d <= 1:
                        break
            if min_d <= 1:
                cur_mask |= 1 << min_v
                cur_size += 1
                avail &= ~(bits[min_v] | 1 << min_v)
                continue
            pick = min_v
            break
        if not avail:
            if cur_size > best_size:
                best_size, best_mask = cur_size, cur_mask
            return
        if cur_size + _clique_cover_bound(bits, avail) <= best_size:
            return
        rec(avail & ~(bits[pick] | 1 << pick), cur_mask | 1 << pick, cur_size + 1)
        rec(avail & ~(1 << pick), cur_mask, cur_size)

    rec(avail, 0, 0)
    return best_size, best_mask


def _mis_tree(t: Graph) -> tuple[int, set[int]]:
    """Linear include/exclude dynamic program on a rooted tree, with witness."""
    n = t.n
    parent = [-1] * n
    parent[0] = 0
    order = []
    stack = [0]
    while stack:
        v = stack.pop()
        order.append(v)
        for u in t.neighbors(v):
            if parent[u] < 0:
                parent[u] = v
                stack.append(u)
    inc = [1] * n
    exc = [0] * n
    children: list[list[int]] = [[] for _ in range(n)]
    for v in order[1:]:
        children[parent[v]].append(v)
    for v in reversed(order):
        for c in children[v]:
            inc[v] += exc[c]
            exc[v] += max(inc[c], exc[c])
    witness: set[int] = set()
    todo = [(0, False)]
    while todo:
        v, banned = todo.pop()
        take = not banned and inc[v] >= exc[v]
        if take:
            witness.add(v)
        for c in children[v]:
            todo.append((c, take))
    return max(inc[0], exc[0]), witness


def _verify_independent(g: Graph, witness: set[int] | frozenset[int]) -> None:
    for u, v in g.edges():
        if u in witness and v in witness:
            raise RuntimeError(f"witness not independent: edge ({u}, {v})")


def independence_number(g: Graph) -> IndependenceCertificate:
    """Exact alpha(G) with a witness, re-verified by edge scan."""
    if is_tree(g):
        size, wit = _mis_tree(g)
    else:
        size, mask = _mis_mask(g.bits, (1 << g.n) - 1)
        wit = {v for v in range(g.n) if mask >> v & 1}
    if len(wit) != size:
        raise RuntimeError("witness size mismatch")
    _verify_independent(g, wit)
    return IndependenceCertificate(size, frozenset(wit))


def leaf_containing_mis(t: Graph) -> frozenset[int]:
    """A maximum independent set of a tree containing every leaf.

    The two-vertex tree is the documented degenerate case: its leaves are
    adjacent, so the result contains only vertex 0.
    """
    if not is_tree(t):
        raise ValueError("leaf_containing_mis requires a tree")
    if t.n <= 2:
        return frozenset({0})
    lvs = set(leaves(t))
    blocked = 0
    for v in lvs:
        blocked |= 1 << v | t.bits[v]
    _, mask = _mis_mask(t.bits, (1 << t.n) - 1 & ~blocked)
    wit = lvs | {v for v in range(t.n) if mask >> v & 1}
    _verify_independent(t, wit)
    if len(wit) != independence_number(t).alpha:
        raise RuntimeError("leaf-containing set is not maximum")
    return frozenset(wit)


def alternating_classification(t: Graph) -> AlternatingClassification:
    """Classify non-leaves of a tree by parity of their position on paths
    between end branch points.

    Requires at least two end branch points. Odd positions form V1*, even
    positions (including the end branch points) form V2*. The result is
    flagged inconsistent when some path has odd length, a vertex receives
    conflicting parities, or a non-leaf lies on no such path.
    """
    ebps = end_branch_points(t)
    if len(ebps) < 2:
        raise ValueError("need at least two end branch points")
    lvs = frozenset(leaves(t))
    parity: dict[int, int] = {}
    conflict = None
    for a, b in combinations(ebps, 2):
        path = tree_path(t, a, b)
        if (len(path) - 1) % 2:
            conflict = f"path between {a} and {b} has odd length {len(path) - 1}"
            break
        for i, v in enumerate(path):
            if parity.get(v, i % 2) != i % 2:
                conflict = f"vertex {v} has conflicting path parities"
                break
            parity[v] = i % 2
        if conflict:
            break
    if conflict is None:
        uncovered = set(range(t.n)) - lvs - parity.keys()
        if uncovered:
            v = min(uncovered)
            conflict = f"non-leaf {v} lies on no end-branch-point path"
    if conflict is not None:
        return AlternatingClassification(frozenset(), frozenset(), lvs, False, conflict)
    v1 = frozenset(v for v, p in parity.items() if p == 1)
    v2 = frozenset(v for v, p in parity.items() if p == 0)
    return AlternatingClassification(v1, v2, lvs, True, None)
