"""Immutable simple graphs on vertices 0..n-1 with bitset adjacency.

Supports the structural queries and graph surgeries used throughout the
package (leaves, branch points, internal edges, subdivision, neighbor
shifting, pendant paths) plus bit-exact graph6 encoding and decoding.
"""
from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence

MAX_N = 64

Edge = tuple[int, int]


class Graph:
    """Undirected simple graph, immutable after construction.

    Adjacency is stored as one integer bitmask per vertex; n <= 64 keeps
    every mask in a single machine word.
    """

    __slots__ = ("n", "bits")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if not 1 <= n <= MAX_N:
            raise ValueError(f"vertex count must be in [1, {MAX_N}], got {n}")
        bits = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if bits[u] >> v & 1:
                raise ValueError(f"duplicate edge ({u}, {v})")
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        self.n: int = n
        self.bits: tuple[int, ...] = tuple(bits)

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(b.bit_count() for b in self.bits) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.bits[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.bits[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(b.bit_count() for b in self.bits)

    def neighbors(self, v: int) -> list[int]:
        mask = self.bits[v]
        return [u for u in range(self.n) if mask >> u & 1]

    def edges(self) -> list[Edge]:
        """All edges as (u, v) pairs with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            mask = self.bits[u] >> (u + 1)
            v = u + 1
            while mask:
                if mask & 1:
                    out.append((u, v))
                mask >>= 1
                v += 1
        return out

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image under the vertex map v -> perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.bits == other.bits

    def __hash__(self) -> int:
        return hash(self.bits)

    def __repr__(self) -> str:
        return f"Graph({self.n}, {self.edges()})"


def new_graph(n: int, edges: Iterable[Edge] = ()) -> Graph:
    """Validating constructor; rejects out-of-range endpoints, loops, duplicates."""
    return Graph(n, edges)


def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in range(g.n):
            if frontier >> v & 1:
                nxt |= g.bits[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    edges = []
    for u in range(g.n):
        mask = (full & ~g.bits[u]) >> (u + 1)
        v = u + 1
        while mask:
            if mask & 1:
                edges.append((u, v))
            mask >>= 1
            v += 1
    return Graph(g.n, edges)


def leaves(g: Graph) -> list[int]:
    """Degree-1 vertices."""
    return [v for v in range(g.n) if g.degree(v) == 1]


def branch_points(t: Graph) -> list[int]:
    """Degree >= 3 vertices of a tree."""
    if not is_tree(t):
        raise ValueError("branch_points requires a tree")
    return [v for v in range(t.n) if t.degree(v) >= 3]


def distances(g: Graph, src: int) -> list[int]:
    """BFS distances from src; -1 marks unreachable vertices."""
    dist = [-1] * g.n
    dist[src] = 0
    queue = deque([src])
    while queue:
        v = queue.popleft()
        mask = g.bits[v]
        for u in range(g.n):
            if mask >> u & 1 and dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def tree_path(t: Graph, u: int, v: int) -> list[int]:
    """The unique u..v path in a tree, as a vertex list including both ends."""
    parent = [-1] * t.n
    parent[u] = u
    queue = deque([u])
    while queue:
        w = queue.popleft()
        if w == v:
            break
        for x in t.neighbors(w):
            if parent[x] < 0:
                parent[x] = w
                queue.append(x)
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def end_branch_points(t: Graph) -> list[int]:
    """Branch points lying on no path between two other branch points.

    Computed by the literal definition: for each branch point b, every
    pair of other branch points is tested for a path through b.
    """
    bps = branch_points(t)
    out = []
    for b in bps:
        others = [p for p in bps if p != b]
        covered = False
        for i in range(len(others)):
            for j in range(i + 1, len(others)):
                if b in tree_path(t, others[i], others[j]):
                    covered = True
                    break
            if covered:
                break
        if not covered:
            out.append(b)
    return out


def internal_edges(g: Graph) -> list[Edge]:
    """Edges on paths whose ends have degree >= 3 and interiors degree 2."""
    deg = g.degrees()
    found: set[Edge] = set()
    for a in range(g.n):
        if deg[a] < 3:
            continue
        for w in g.neighbors(a):
            prev, cur = a, w
            chain = [(a, w)]
            closed = False
            while deg[cur] == 2:
                nxt = next(x for x in g.neighbors(cur) if x != prev)
                if nxt == a:
                    # chain loops back to its start, so it is not a path
                    closed = True
                    break
                chain.append((cur, nxt))
                prev, cur = cur, nxt
            if not closed and deg[cur] >= 3:
                found.update((u, v) if u < v else (v, u) for u, v in chain)
    return sorted(found)


def subdivide_edge(g: Graph, e: Edge, times: int = 1) -> Graph:
    """Replace edge e by a path with `times` new interior vertices.

    New vertex ids are appended at the end of the id range, ordered from
    the first endpoint of e toward the second.
    """
    u, v = e
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    if times < 1:
        raise ValueError("times must be >= 1")
    if g.n + times > MAX_N:
        raise ValueError(f"result exceeds {MAX_N} vertices")
    drop = (u, v) if u < v else (v, u)
    edges = [x for x in g.edges() if x != drop]
    chain = [u, *range(g.n, g.n + times), v]
    edges.extend(zip(chain, chain[1:]))
    return Graph(g.n + times, edges)


def shift_neighbors(g: Graph, v: int, u: int, region: Iterable[int]) -> Graph:
    """Rewire every edge vw with w in region to uw.

    Requires region nonempty and region a subset of N(v) minus (N(u) + {u}),
    so edge count is preserved and no duplicate edge can arise.
    """
    r = set(region)
    if not r:
        raise ValueError("region must be nonempty")
    allowed = set(g.neighbors(v)) - set(g.neighbors(u)) - {u}
    if not r <= allowed:
        raise ValueError("region must lie in N(v) minus N(u) and u itself")
    edges = []
    for a, b in g.edges():
        if (a == v and b in r) or (b == v and a in r):
            continue
        edges.append((a, b))
    edges.extend((u, w) for w in sorted(r))
    return Graph(g.n, edges)


def attach_pendant_paths(g: Graph, v: int, lengths: Iterable[int]) -> Graph:
    """Glue disjoint paths of the given edge lengths to vertex v."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    lens = list(lengths)
    if any(ln < 1 for ln in lens):
        raise ValueError("path lengths must be >= 1")
    n = g.n
    if n + sum(lens) > MAX_N:
        raise ValueError(f"result exceeds {MAX_N} vertices")
    edges = g.edges()
    for ln in lens:
        chain = [v, *range(n, n + ln)]
        edges.extend(zip(chain, chain[1:]))
        n += ln
    return Graph(n, edges)


def graph6_encode(g: Graph) -> str:
    """Standard graph6 string for g (long size form for n >= 63)."""
    n = g.n
    if n <= 62:
        head = [n + 63]
    else:
        head = [126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)]
    body = []
    acc = 0
    k = 0
    for j in range(1, n):
        col = g.bits[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            k += 1
            if k == 6:
                body.append(acc + 63)
                acc = 0
                k = 0
    if k:
        body.append((acc << (6 - k)) + 63)
    return bytes(head + body).decode("ascii")


def graph6_decode(text: str | bytes) -> Graph:
    """Parse a graph6 string; rejects malformed input and n outside [1, 64]."""
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("ascii", errors="replace")
    s = text.strip()
    if not s:
        raise ValueError("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise ValueError(f"invalid graph6 character in {s!r}")
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            raise ValueError("graph6 size form beyond supported range")
        if len(s) < 4:
            raise ValueError("truncated graph6 size header")
        n = (ord(s[1]) - 63) << 12 | (ord(s[2]) - 63) << 6 | (ord(s[3]) - 63)
        rest = s[4:]
    else:
        n = ord(s[0]) - 63
        rest = s[1:]
    if not 1 <= n <= MAX_N:
        raise ValueError(f"vertex count {n} outside supported range [1, {MAX_N}]")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(rest) != need:
        raise ValueError(f"graph6 payload has {len(rest)} bytes, expected {need}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (ord(rest[k // 6]) - 63) >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)
