"""A_sigma matrices, spectral radii, Perron vectors, and closed-form bounds.

A_sigma(G) = sigma*D(G) + (1-sigma)*A(G) for sigma in [0, 1); sigma = 1 is
rejected everywhere because every statement handled by this package
excludes it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, distances, is_connected

ITERATION_CAP = 10**6


def validate_sigma(sigma: float) -> float:
    """Check sigma in [0, 1) and return it as a float."""
    s = float(sigma)
    if not 0.0 <= s < 1.0 or math.isnan(s):
        raise ValueError(f"sigma must lie in [0, 1), got {sigma!r}")
    return s


@dataclass(frozen=True)
class SpectralResult:
    """Spectral radius lam with unit Perron vector and convergence data."""

    lam: float
    perron: np.ndarray
    residual: float
    iterations: int


def a_sigma_matrix(g: Graph, sigma: float) -> np.ndarray:
    """Dense symmetric A_sigma(G): diagonal sigma*d(v), off-diagonal (1-sigma)."""
    s = validate_sigma(sigma)
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0 - s
    np.fill_diagonal(a, [s * d for d in g.degrees()])
    return a


def jacobi_eigh(a: np.ndarray, sweeps: int = 60) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi diagonalization of a symmetric matrix.

    Returns (eigenvalues, eigenvectors) with eigenvalues ascending; kept
    free of LAPACK so it can serve as an independent cross-check.
    """
    m = np.array(a, dtype=float, copy=True)
    n = m.shape[0]
    vecs = np.eye(n)
    for _ in range(sweeps):
        # summed directly: total minus diagonal cancels catastrophically
        # once the off-diagonal part is small
        off = math.sqrt(2.0 * float(np.sum(np.triu(m, 1) ** 2)))
        if off < 1e-14:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = m[p, q]
                if abs(apq) < 1e-18:
                    continue
                theta = (m[q, q] - m[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rot_p = c * m[:, p] - s * m[:, q]
                rot_q = s * m[:, p] + c * m[:, q]
                m[:, p], m[:, q] = rot_p, rot_q
                m[p, :], m[q, :] = c * m[p, :] - s * m[q, :], s * m[p, :] + c * m[q, :]
                vec_p = c * vecs[:, p] - s * vecs[:, q]
                vec_q = s * vecs[:, p] + c * vecs[:, q]
                vecs[:, p], vecs[:, q] = vec_p, vec_q
    order = np.argsort(np.diag(m))
    return np.diag(m)[order], vecs[:, order]


def spectral_radius(g: Graph, sigma: float, tol: float = 1e-12) -> SpectralResult:
    """Largest eigenvalue of A_sigma(G) with its unit Perron vector.

    Power iteration runs on A_sigma(G) + I so the dominant eigenvalue is
    simple for connected G even at sigma = 0 on bipartite graphs; Jacobi
    diagonalization takes over if the iteration cap is reached.
    """
    s = validate_sigma(sigma)
    if tol <= 0:
        raise ValueError("tol must be positive")
    if not is_connected(g):
        raise ValueError("spectral_radius requires a connected graph")
    a = a_sigma_matrix(g, s)
    n = g.n
    if n == 1:
        return SpectralResult(0.0, np.ones(1), 0.0, 0)
    shifted = a + np.eye(n)
    x = np.full(n, 1.0 / math.sqrt(n))
    iterations = 0
    while iterations < ITERATION_CAP:
        y = shifted @ x
        x = y / np.linalg.norm(y)
        iterations += 1
        ax = a @ x
        lam = float(x @ ax)
        residual = float(np.linalg.norm(ax - lam * x))
        if residual <= tol:
            if x.sum() < 0:
                x = -x
            return SpectralResult(lam, x, residual, iterations)
    vals, vecs = jacobi_eigh(a)
    lam = float(vals[-1])
    x = vecs[:, -1]
    if x.sum() < 0:
        x = -x
    ax = a @ x
    residual = float(np.linalg.norm(ax - lam * x))
    if residual > tol:
        raise RuntimeError(
            f"eigensolver failed to reach tol={tol} (residual {residual})"
        )
    return SpectralResult(lam, x, residual, iterations)


def bipartition(g: Graph) -> tuple[set[int], set[int]] | None:
    """The 2-coloring classes of a connected bipartite graph, else None."""
    color = [-1] * g.n
    color[0] = 0
    dist = distances(g, 0)
    if min(dist) < 0:
        raise ValueError("bipartition requires a connected graph")
    for v in range(g.n):
        color[v] = dist[v] % 2
    for u, v in g.edges():
        if color[u] == color[v]:
            return None
    return {v for v in range(g.n) if color[v] == 0}, {
        v for v in range(g.n) if color[v] == 1
    }


def pendant_attach_lambda0(g: Graph, part: set[int], k: int) -> float:
    """Predicted lambda_0 after attaching k pendant edges to every vertex of
    one partite set: sqrt(lambda_0(G)^2 + k)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    classes = bipartition(g)
    if classes is None:
        raise ValueError("graph is not bipartite")
    if set(part) not in (classes[0], classes[1]):
        raise ValueError("given set is not a partite set of the graph")
    lam0 = spectral_radius(g, 0.0).lam
    return math.sqrt(lam0 * lam0 + k)


def bound_convex(g: Graph, sigma: float) -> float:
    """Upper bound 2*sigma*lambda_{1/2}(G) + (1-2*sigma)*lambda_0(G)."""
    s = validate_sigma(sigma)
    if s > 0.5:
        raise ValueError("bound applies only for sigma in [0, 1/2]")
    lam_half = spectral_radius(g, 0.5).lam
    lam_zero = spectral_radius(g, 0.0).lam
    return 2 * s * lam_half + (1 - 2 * s) * lam_zero


def bound_star_lower(delta: int, sigma: float) -> float:
    """Lower bound (1/2)(sqrt(sigma^2(D+1)^2 + 4D(1-2sigma)) + sigma(D+1));
    attained exactly by the star with D rays."""
    s = validate_sigma(sigma)
    if delta < 1:
        raise ValueError("maximum degree must be >= 1")
    d1 = delta + 1
    return 0.5 * (math.sqrt(s * s * d1 * d1 + 4 * delta * (1 - 2 * s)) + s * d1)


def bound_degree_lower(delta: int, sigma: float) -> float:
    """Piecewise lower bound: sigma(D+1) below sigma=1/2, sigma*D+1-sigma above."""
    s = validate_sigma(sigma)
    if delta < 1:
        raise ValueError("maximum degree must be >= 1")
    if s <= 0.5:
        return s * (delta + 1)
    return s * delta + 1 - s


def bound_edge_density(g: Graph, sigma: float) -> tuple[float, float]:
    """(2|E|/n, max over adjacent u,v of sigma*d(u)+(1-sigma)*d(v))."""
    s = validate_sigma(sigma)
    if g.m == 0:
        raise ValueError("bound requires at least one edge")
    deg = g.degrees()
    upper = max(
        max(s * deg[u] + (1 - s) * deg[v], s * deg[v] + (1 - s) * deg[u])
        for u, v in g.edges()
    )
    return 2 * g.m / g.n, upper


def search_bound_rhs(t: int, lp: int, sigma: float) -> float:
    """Upper bound for the minimizer's spectral radius in terms of the
    balanced pendant count t and remainder lp.

    Below sigma = 1/2: sigma(t+5) + (1-2sigma)sqrt(t+5). At or above:
    sigma(t+2) + 2(1-sigma) when lp <= 2, else sigma(t+3) + 2(1-sigma).
    """
    s = validate_sigma(sigma)
    if t < 0 or lp < 0:
        raise ValueError("t and lp must be nonnegative")
    if s < 0.5:
        return s * (t + 5) + (1 - 2 * s) * math.sqrt(t + 5)
    if lp <= 2:
        return s * (t + 2) + 2 * (1 - s)
    return s * (t + 3) + 2 * (1 - s)


def lemma47_threshold(c: int, sigma: float) -> int:
    """Smallest n from which the structure theorem applies at alpha = n - c."""
    s = validate_sigma(sigma)
    if c < 4:
        raise ValueError("c must be >= 4")
    if s == 0.0:
        return math.ceil((4 * c * c - 6 * c - 3) / 3)
    if s < 0.5:
        base = (1 - 2 * s) * (c - 3) / (3 * s) + math.sqrt(c + 2)
        return max(math.ceil(c * base * base - 3 * c - 1), 2 * c + 4)
    return max(c * c - c - 1, 2 * c + 4)
