"""Isomorphism-free streams of trees and connected graphs, with cached
pools split by independence number."""
from __future__ import annotations

import math

from .canonical import canonical_code
from .graphs import Graph, graph6_decode, graph6_encode, is_connected
from .independence import independence_number

MAX_TREE_N = 21
MAX_GRAPH_N = 9

# level-sequence successor: the lexicographically next canonical rooted
# tree, root at depth 1
def _next_rooted(seq):
    p = len(seq) - 1
    while p >= 0 and seq[p] <= 2:
        p -= 1
    if p < 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    out = seq[:p]
    span = p - q
    while len(out) < len(seq):
        out.append(out[len(out) - span])
    return out


def _rooted_sequences(n):
    seq = list(range(1, n + 1))
    while seq is not None:
        yield seq
        seq = _next_rooted(seq)


def _parents(seq):
    # parent of each position; positions are preorder, depth = seq value
    last = [0] * (len(seq) + 1)
    par = [-1] * len(seq)
    for i, d in enumerate(seq):
        if d > 1:
            par[i] = last[d - 1]
        last[d] = i
    return par


def _tree_graph(par):
    return Graph(len(par), [(i, p) for i, p in enumerate(par) if p >= 0])


def _centroid_rooted(seq):
    # root is the unique centroid iff every root subtree stays below n/2
    n = len(seq)
    limit = (n - 1) // 2
    size = 0
    for d in seq[1:]:
        if d == 2:
            if size > limit:
                return False
            size = 1
        else:
            size += 1
    return size <= limit


def all_trees(n):
    """One tree per isomorphism class, deterministic order."""
    if not 1 <= n <= MAX_TREE_N:
        raise ValueError(f"tree enumeration covers 1 <= n <= {MAX_TREE_N}")
    if n == 1:
        yield Graph(1)
        return
    if n == 2:
        yield Graph(2, [(0, 1)])
        return
    for seq in _rooted_sequences(n):
        if _centroid_rooted(seq):
            yield _tree_graph(_parents(seq))
    if n % 2 == 0:
        # bicentroidal trees: unordered pairs of rooted halves joined at
        # their roots
        half = n // 2
        halves = [seq[:] for seq in _rooted_sequences(half)]
        for i, a in enumerate(halves):
            pa = _parents(a)
            for b in halves[i:]:
                edges = [(v, p) for v, p in enumerate(pa) if p >= 0]
                edges += [
                    (half + v, (half + p) if p >= 0 else 0)
                    for v, p in enumerate(_parents(b))
                ]
                yield Graph(n, edges)


def _augment(parent_codes, n):
    # children of each (n-1)-vertex graph: join a fresh vertex to every
    # nonempty subset, keep one representative per canonical code
    seen = set()
    out = []
    for code in parent_codes:
        g = graph6_decode(code)
        base = g.edges()
        for mask in range(1, 1 << g.n):
            extra = [(v, g.n) for v in range(g.n) if mask >> v & 1]
            h = Graph(n, base + extra)
            c = canonical_code(h)
            if c not in seen:
                seen.add(c)
                out.append(c)
    out.sort()
    return out


_conn_pool: dict[int, list[bytes]] = {}


def _connected_codes(n):
    if n not in _conn_pool:
        if n == 1:
            _conn_pool[n] = [canonical_code(Graph(1))]
        else:
            _conn_pool[n] = _augment(_connected_codes(n - 1), n)
    return _conn_pool[n]


def all_connected_graphs(n):
    """One connected graph per isomorphism class."""
    if not 1 <= n <= MAX_GRAPH_N:
        raise ValueError(f"graph enumeration covers 1 <= n <= {MAX_GRAPH_N}")
    for code in _connected_codes(n):
        yield graph6_decode(code)


def filter_alpha(src, alpha):
    """Pass through the graphs whose independence number is alpha."""
    for g in src:
        if independence_number(g).alpha == alpha:
            yield g


def _alpha_from_parents(par):
    # include/exclude tree DP straight off the parent array
    n = len(par)
    inc = [1] * n
    exc = [0] * n
    for i in range(n - 1, 0, -1):
        p = par[i]
        exc[p] += inc[i] if inc[i] > exc[i] else exc[i]
        inc[p] += exc[i]
    return inc[0] if inc[0] > exc[0] else exc[0]


def _tree_pool(n):
    # newline-joined graph6 blobs keyed by alpha; parent arrays let both
    # the alpha split and the encoding skip full Graph construction
    split: dict[int, bytearray] = {}

    def put(par):
        a = _alpha_from_parents(par)
        blob = split.setdefault(a, bytearray())
        blob += graph6_encode(_tree_graph(par)).encode()
        blob += b"\n"

    if n == 1:
        put([-1])
        return split
    if n == 2:
        put([-1, 0])
        return split
    for seq in _rooted_sequences(n):
        if _centroid_rooted(seq):
            put(_parents(seq))
    if n % 2 == 0:
        half = n // 2
        halves = [_parents(seq) for seq in _rooted_sequences(half)]
        for i, pa in enumerate(halves):
            for pb in halves[i:]:
                put(pa + [half + p if p >= 0 else 0 for p in pb])
    return split


_alpha_pool: dict[tuple[str, int], dict[int, bytes]] = {}


def pool_by_alpha(cls, n, alpha):
    """Graph6 codes of the (class, n, alpha) slice.

    The whole class is enumerated on first use and cached split by
    independence number.
    """
    key = (cls, n)
    if key not in _alpha_pool:
        if cls == "tree":
            split = _tree_pool(n) if 1 <= n <= MAX_TREE_N else _bad_tree_n(n)
        elif cls == "connected":
            split = {}
            for g in all_connected_graphs(n):
                a = independence_number(g).alpha
                blob = split.setdefault(a, bytearray())
                blob += graph6_encode(g).encode() + b"\n"
        else:
            raise ValueError(f"unknown class {cls!r}")
        _alpha_pool[key] = {a: bytes(b) for a, b in split.items()}
    return _alpha_pool[key].get(alpha, b"").splitlines()


def _bad_tree_n(n):
    raise ValueError(f"tree enumeration covers 1 <= n <= {MAX_TREE_N}")


def from_graph6_lines(lines):
    """Decode an externally produced one-graph-per-line graph6 stream."""
    for ln, raw in enumerate(lines, 1):
        text = raw.strip()
        if not text:
            continue
        try:
            yield graph6_decode(text)
        except ValueError as exc:
            raise ValueError(f"line {ln}: {exc}") from None


# ---------------------------------------------------------------------------
# independent counting oracles, used by the test suite


def tree_count_oracle(n):
    """Count tree classes by exhaustive labeled generation plus canonical
    dedup: all Pruefer sequences up to n=8, increasing parent arrays above."""
    if n > 10:
        raise ValueError("oracle is priced for n <= 10")
    if n == 1:
        return 1
    if n == 2:
        return 1
    seen = set()
    if n <= 8:
        for num in range(n ** (n - 2)):
            seq, x = [], num
            for _ in range(n - 2):
                x, r = divmod(x, n)
                seq.append(r)
            seen.add(canonical_code(_pruefer_graph(seq, n)))
    else:
        def rec(par):
            i = len(par)
            if i == n:
                seen.add(canonical_code(_tree_graph(par)))
                return
            for p in range(i):
                rec(par + [p])

        rec([-1])
    return len(seen)


def _pruefer_graph(seq, n):
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        u = min(w for w in range(n) if degree[w] == 1)
        edges.append((u, v))
        degree[u] -= 1
        degree[v] -= 1
    edges.append(tuple(w for w in range(n) if degree[w] == 1))
    return Graph(n, edges)


def connected_count_oracle(n):
    """Count connected classes the blunt way: every edge subset of K_n,
    keep the connected ones, dedupe by canonical code."""
    if n > 7:
        raise ValueError("oracle is priced for n <= 7")
    if n == 1:
        return 1
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    full = (1 << n) - 1
    seen = set()
    for mask in range(1 << len(pairs)):
        bits = [0] * n
        sub = mask
        while sub:
            low = sub & -sub
            i, j = pairs[low.bit_length() - 1]
            bits[i] |= 1 << j
            bits[j] |= 1 << i
            sub ^= low
        reach = 1
        frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                v = f & -f
                nxt |= bits[v.bit_length() - 1]
                f ^= v
            frontier = nxt & ~reach
            reach |= frontier
        if reach != full:
            continue
        edges = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
        seen.add(canonical_code(Graph(n, edges)))
    return len(seen)


def connected_count_cycle_index(n):
    """Same count by pure arithmetic: Burnside over cycle types of S_n
    acting on vertex pairs, then an inverse Euler transform.  Shares no
    code with the generators or the canonical form."""
    total = [_cycle_index_graph_count(k) for k in range(n + 1)]
    # invert g = Euler(c): d_n = n g_n - sum d_k g_{n-k}; d_n = sum_{d|n} d c_d
    d = [0] * (n + 1)
    c = [0] * (n + 1)
    for m in range(1, n + 1):
        d[m] = m * total[m] - sum(d[k] * total[m - k] for k in range(1, m))
        c[m] = (d[m] - sum(e * c[e] for e in range(1, m) if m % e == 0)) // m
    return c[n]


def _cycle_index_graph_count(n):
    # permutations with cycle lengths part fix 2^(pair cycles) graphs;
    # pair cycles = sum gcd over cross pairs + floor(len/2) within
    if n == 0:
        return 1
    total = 0
    for part in _partitions(n):
        mult: dict[int, int] = {}
        for k in part:
            mult[k] = mult.get(k, 0) + 1
        perms = math.factorial(n)
        for k, m in mult.items():
            perms //= k**m * math.factorial(m)
        pair_cycles = sum(k // 2 for k in part)
        for i in range(len(part)):
            for j in range(i + 1, len(part)):
                pair_cycles += math.gcd(part[i], part[j])
        total += perms << pair_cycles
    return total // math.factorial(n)


def _partitions(n, cap=None):
    if n == 0:
        yield []
        return
    if cap is None:
        cap = n
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions(n - first, first):
            yield [first] + rest
