"""Equitable partitions, quotient matrices, and numeric certification of the
characteristic-polynomial identities behind the candidate-table refinements."""
from __future__ import annotations

from collections.abc import Iterable
from fractions import Fraction

import numpy as np

from .graphs import Graph
from .spectral import spectral_radius, validate_sigma

CHARPOLY_MAX_ORDER = 12


class Partition:
    """Ordered partition of {0..n-1} into disjoint nonempty blocks."""

    __slots__ = ("n", "blocks")

    def __init__(self, n: int, blocks: Iterable[Iterable[int]]):
        blks = tuple(tuple(sorted(set(b))) for b in blocks)
        if any(not b for b in blks):
            raise ValueError("blocks must be nonempty")
        flat = [v for b in blks for v in b]
        if sorted(flat) != list(range(n)):
            raise ValueError("blocks must partition 0..n-1 exactly")
        self.n = n
        self.blocks = blks

    def __repr__(self) -> str:
        return f"Partition({self.n}, {list(self.blocks)})"


def _block_profile(g: Graph, p: Partition) -> list[list[int]] | None:
    """Per-block neighbor counts (rows) if constant within blocks, else None."""
    masks = []
    for b in p.blocks:
        m = 0
        for v in b:
            m |= 1 << v
        masks.append(m)
    rows = []
    for b in p.blocks:
        first = None
        for v in b:
            counts = [(g.bits[v] & m).bit_count() for m in masks]
            if first is None:
                first = counts
            elif counts != first:
                return None
        rows.append(first)
    return rows


def is_equitable(g: Graph, sigma: float, p: Partition) -> bool:
    """True iff blockwise neighbor counts and within-block degrees are constant."""
    validate_sigma(sigma)
    if p.n != g.n:
        raise ValueError("partition is over a different vertex count")
    for b in p.blocks:
        if len({g.degree(v) for v in b}) != 1:
            return False
    return _block_profile(g, p) is not None


def quotient_matrix(g: Graph, sigma: float, p: Partition) -> np.ndarray:
    """Blockwise A_sigma row sums for an equitable partition."""
    s = validate_sigma(sigma)
    if not is_equitable(g, s, p):
        raise ValueError("partition is not equitable for this graph")
    rows = _block_profile(g, p)
    assert rows is not None
    k = len(p.blocks)
    out = np.zeros((k, k))
    for i, b in enumerate(p.blocks):
        d = g.degree(b[0])
        for j in range(k):
            out[i, j] = (1 - s) * rows[i][j]
        out[i, i] += s * d
    return out


def quotient_lambda_check(g: Graph, sigma: float, p: Partition, tol: float = 1e-8) -> bool:
    """Largest quotient eigenvalue vs spectral_radius of the full graph."""
    w = quotient_matrix(g, sigma, p)
    lam_q = float(np.max(np.linalg.eigvals(w).real))
    lam = spectral_radius(g, sigma).lam
    return abs(lam_q - lam) <= tol


def charpoly(m: np.ndarray) -> np.ndarray:
    """Monic characteristic polynomial coefficients, highest power first.

    Faddeev-LeVerrier recurrence at double precision; order capped at 12.
    """
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("matrix must be square")
    k = m.shape[0]
    if k > CHARPOLY_MAX_ORDER:
        raise ValueError(f"order {k} exceeds cap {CHARPOLY_MAX_ORDER}")
    coeffs = [1.0]
    work = m.copy()
    eye = np.eye(k)
    for i in range(1, k + 1):
        if i > 1:
            work = m @ (work + coeffs[-1] * eye)
        coeffs.append(-np.trace(work) / i)
    return np.array(coeffs)


def eval_poly(coeffs: np.ndarray, x: float) -> float:
    """Horner evaluation of charpoly output."""
    acc = 0.0
    for c in coeffs:
        acc = acc * x + c
    return acc


def _t1_rows(s, a, d):
    o = 1 - s
    return [
        [s, o, 0, 0, 0],
        [a * o, (a + 1) * s, o, 0, 0],
        [0, o, 2 * s, o, 0],
        [0, 0, 3 * o, (d + 3) * s, d * o],
        [0, 0, 0, o, s],
    ]


def _t2_rows(s, l1, l2, l3, l4):
    o = 1 - s
    z = [0] * 11

    def row(entries):
        r = z[:]
        for j, val in entries:
            r[j] = val
        return r

    return [
        row([(0, s), (1, o)]),
        row([(0, l1 * o), (1, (l1 + 1) * s), (2, o)]),
        row([(1, o), (2, 2 * s), (4, o)]),
        row([(3, s), (4, o)]),
        row([(2, o), (3, l2 * o), (4, (l2 + 2) * s), (5, o)]),
        row([(4, o), (5, 2 * s), (7, o)]),
        row([(6, s), (7, o)]),
        row([(5, o), (6, l3 * o), (7, (l3 + 2) * s), (8, o)]),
        row([(7, o), (8, 2 * s), (10, o)]),
        row([(9, s), (10, o)]),
        row([(8, o), (9, l4 * o), (10, (l4 + 1) * s)]),
    ]


def t1_quotient(sigma: float, outer: float, center: float) -> np.ndarray:
    """Five-block quotient of the subdivided-star shape with `outer` pendants
    at each of the three outer skeleton vertices and `center` at the middle.

    Blocks: outer pendants, outer vertices, subdivision vertices, center,
    center pendants.
    """
    s = validate_sigma(sigma)
    return np.array(_t1_rows(s, float(outer), float(center)))


def t2_quotient(sigma: float, counts: tuple[float, float, float, float]) -> np.ndarray:
    """Eleven-block quotient of the subdivided-path shape with the given
    pendant counts at the four skeleton vertices.

    Block order: pendants/vertex/subdivision repeating along the path:
    W1, u1, w1, W2, u2, w2, W3, u3, w3, W4, u4.
    """
    s = validate_sigma(sigma)
    return np.array(_t2_rows(s, *(float(c) for c in counts)))


def _det_exact(rows: list[list[Fraction]]) -> Fraction:
    """Bareiss fraction-free elimination; exact over rationals."""
    n = len(rows)
    m = [r[:] for r in rows]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
            m[i][k] = Fraction(0)
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _charpoly_at_exact(rows: list[list], x: Fraction) -> Fraction:
    n = len(rows)
    shifted = [
        [(x if i == j else Fraction(0)) - Fraction(rows[i][j]) for j in range(n)]
        for i in range(n)
    ]
    return _det_exact(shifted)


def _swap_bracket(s, x):
    return s * x * x - (s * s + 2 * s - 1) * x + 2 * s * s - s


def _tail_shift_g(s, t, x):
    c3 = -(7 * s + 2 * s * t)
    c2 = s * s * t * t + 9 * s * s * t + 16 * s * s + 2 * s * t + 4 * s - t - 2
    c1 = (
        -2 * s**3 * t * t
        - 10 * s**3 * t
        - 14 * s**3
        - 2 * s * s * t * t
        - 12 * s * s * t
        - 12 * s * s
        + s * t * t
        + 6 * s * t
        + 6 * s
    )
    c0 = (
        2 * s**4 * t
        + 4 * s**4
        + 4 * s**3 * t * t
        + 12 * s**3 * t
        + 8 * s**3
        - 2 * s * s * t * t
        - 6 * s * s * t
        - 4 * s * s
    )
    return x**4 + c3 * x**3 + c2 * x * x + c1 * x + c0


FACTORIZATION_IDS = (
    "t1-shift3",
    "t1-shift3-half",
    "t2-swap23",
    "t2-swap23-wide",
    "t2-tail-shift",
)


def factorization_check(
    ident: str, sigma: float, t: int, x: float, tol: float = 1e-7
) -> bool:
    """Certify one of the five displayed charpoly-difference identities at a
    numeric (sigma, t, x) sample.

    Builds both quotient matrices of the named pair of pendant-count
    shapes, evaluates the characteristic polynomial difference at x, and
    compares with the displayed factored right-hand side to relative tol.
    Evaluation runs in exact rational arithmetic on the sampled values;
    the two high-order charpolys cancel almost completely, so double
    precision cannot certify the difference at the required tolerance.
    """
    s = Fraction(validate_sigma(sigma))
    tq = Fraction(t)
    xq = Fraction(x)
    if ident in ("t1-shift3", "t1-shift3-half"):
        if ident == "t1-shift3-half" and s != Fraction(1, 2):
            raise ValueError("this identity is specific to sigma = 1/2")
        lhs = _charpoly_at_exact(_t1_rows(s, tq + 1, tq), xq) - _charpoly_at_exact(
            _t1_rows(s, tq + 2, tq - 3), xq
        )
        if ident == "t1-shift3-half":
            rhs = Fraction(1, 2) * xq * xq * (xq - 1) * (tq + 4 - 2 * xq)
        else:
            rhs = -2 * (
                -s * xq * xq + (2 * s * s + 2 * s - 1) * xq - 4 * s * s + 2 * s
            ) * (-xq * xq + (s * tq + 4 * s) * xq + (tq + 3) * (1 - 2 * s))
    elif ident == "t2-swap23":
        lhs = _charpoly_at_exact(
            _t2_rows(s, tq, tq - 1, tq, tq + 1), xq
        ) - _charpoly_at_exact(_t2_rows(s, tq, tq, tq - 1, tq + 1), xq)
        rhs = (s - 1) ** 4 * (2 * s - xq) * _swap_bracket(s, xq) ** 2
    elif ident == "t2-swap23-wide":
        lhs = _charpoly_at_exact(
            _t2_rows(s, tq + 1, tq - 1, tq + 1, tq + 2), xq
        ) - _charpoly_at_exact(_t2_rows(s, tq + 1, tq + 1, tq - 1, tq + 2), xq)
        rhs = 2 * (s - 1) ** 4 * (2 * s - xq) * _swap_bracket(s, xq) ** 2
    elif ident == "t2-tail-shift":
        lhs = _charpoly_at_exact(
            _t2_rows(s, tq + 1, tq, tq + 1, tq + 1), xq
        ) - _charpoly_at_exact(_t2_rows(s, tq + 1, tq, tq, tq + 2), xq)
        rhs = (
            (s - 1) ** 2
            * (2 * s - xq)
            * (s * xq - 2 * s + 1) ** 2
            * _tail_shift_g(s, tq, xq)
        )
    else:
        raise ValueError(f"unknown identity id {ident!r}")
    diff = abs(float(lhs - rhs))
    return diff <= tol * max(1.0, abs(float(lhs)), abs(float(rhs)))
