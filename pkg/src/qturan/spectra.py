"""Adjacency and signless Laplacian spectral radii with Perron vectors.

q(G) is the largest eigenvalue of Q(G) = D(G) + A(G).  The fast path is
deterministic power iteration (Q is PSD, so its top eigenvalue dominates;
the adjacency iteration is run on A + delta*I to avoid sign flips on
bipartite spectra).  Dense symmetric eigensolve is the fallback and the
cross-check oracle at small n.  Disconnected graphs are handled per
component; ties between components break on the smallest canonical form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import graphs
from ._kernels import power_iteration

ADJACENCY = "adjacency"
SIGNLESS_LAPLACIAN = "q"

_KIND_ALIASES = {
    "adjacency": ADJACENCY,
    "a": ADJACENCY,
    "lambda": ADJACENCY,
    "q": SIGNLESS_LAPLACIAN,
    "signless_laplacian": SIGNLESS_LAPLACIAN,
}

DEFAULT_TOL = 1e-10


class SpectralError(ValueError):
    pass


@dataclass
class SpectralResult:
    value: float
    vector: np.ndarray
    residual: float
    iterations: int
    method: str


def normalize_kind(kind: str) -> str:
    try:
        return _KIND_ALIASES[kind.lower()]
    except KeyError:
        raise SpectralError(f"unknown matrix kind {kind!r}") from None


def matrix_of(g: graphs.Graph, kind: str = SIGNLESS_LAPLACIAN) -> np.ndarray:
    a = g.adjacency_matrix()
    if normalize_kind(kind) == SIGNLESS_LAPLACIAN:
        return a + np.diag(a.sum(axis=1))
    return a


def _radius_of_matrix(adj: np.ndarray, kind: str, tol: float):
    """Dominant eigenpair of A or D+A for one (assumed connected) block."""
    n = adj.shape[0]
    if n == 1:
        return 0.0, np.array([1.0]), 0.0, 0, "dense"
    degrees = adj.sum(axis=1)
    if kind == SIGNLESS_LAPLACIAN:
        mat = adj + np.diag(degrees)
        shift = 0.0
    else:
        mat = adj
        shift = float(degrees.max())
    x0 = degrees + 1.0
    max_iter = max(100, int(100 * n * math.log(n + 1)))
    value, vec, resid, iters, ok = power_iteration(
        mat + shift * np.eye(n), x0, tol, max_iter
    )
    if ok:
        return float(value) - shift, vec, float(resid), int(iters), "power"
    vals, vecs = np.linalg.eigh(mat)
    value = float(vals[-1])
    vec = np.abs(vecs[:, -1])
    vec /= np.linalg.norm(vec)
    resid = float(np.linalg.norm(mat @ vec - value * vec))
    return value, vec, resid, int(iters), "dense"


def spectral_radius(
    g: graphs.Graph, kind: str = SIGNLESS_LAPLACIAN, tol: float = DEFAULT_TOL
) -> SpectralResult:
    """Largest eigenvalue of A(G) or Q(G) with a unit nonnegative eigenvector."""
    if tol <= 0:
        raise SpectralError("tol must be positive")
    kind = normalize_kind(kind)
    comps = g.components()
    if len(comps) == 1:
        value, vec, resid, iters, method = _radius_of_matrix(
            g.adjacency_matrix(), kind, tol
        )
        full_vec = vec
    else:
        best = None
        for comp in comps:
            sub = g.induced_subgraph(comp)
            value, vec, resid, iters, method = _radius_of_matrix(
                sub.adjacency_matrix(), kind, tol
            )
            key = (-value, graphs.canonical_form(sub))
            entry = (key, value, vec, comp, iters, method)
            if best is None:
                best = entry
            else:
                dv = value - best[1]
                if dv > 1e-9 or (abs(dv) <= 1e-9 and key < best[0]):
                    best = entry
        _, value, vec, comp, iters, method = best
        full_vec = np.zeros(g.n)
        idx = 0
        for v in range(g.n):
            if (comp >> v) & 1:
                full_vec[v] = vec[idx]
                idx += 1
        mat = matrix_of(g, kind)
        resid = float(np.linalg.norm(mat @ full_vec - value * full_vec))
    return SpectralResult(
        value=float(value),
        vector=full_vec,
        residual=float(resid),
        iterations=iters,
        method=method,
    )


def spectral_radius_matrix(
    adjacency: np.ndarray, kind: str = SIGNLESS_LAPLACIAN, tol: float = DEFAULT_TOL
) -> SpectralResult:
    """Like :func:`spectral_radius` but on a dense 0/1 adjacency of any size.

    Escape hatch for closed-form probes past the 64-vertex Graph cap; the
    matrix is treated as a single block.
    """
    kind = normalize_kind(kind)
    value, vec, resid, iters, method = _radius_of_matrix(
        np.asarray(adjacency, dtype=np.float64), kind, tol
    )
    return SpectralResult(value, vec, resid, iters, method)


def q_radius(g: graphs.Graph, tol: float = DEFAULT_TOL) -> float:
    return spectral_radius(g, SIGNLESS_LAPLACIAN, tol).value


def lambda_radius(g: graphs.Graph, tol: float = DEFAULT_TOL) -> float:
    return spectral_radius(g, ADJACENCY, tol).value


def dense_q_value(g: graphs.Graph) -> float:
    """Exact-arithmetic-free but LAPACK-accurate q(G); oracle for small n."""
    return float(np.linalg.eigvalsh(matrix_of(g, SIGNLESS_LAPLACIAN))[-1])


def dense_lambda_value(g: graphs.Graph) -> float:
    return float(np.linalg.eigvalsh(g.adjacency_matrix())[-1])


def rayleigh_q(g: graphs.Graph, x) -> float:
    """x^T Q(G) x for a unit vector x, via the edge sum of (x_i + x_j)^2."""
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (g.n,):
        raise SpectralError(f"vector length {x.shape} does not match n={g.n}")
    if abs(np.linalg.norm(x) - 1.0) > 1e-9:
        raise SpectralError("rayleigh_q needs a unit vector")
    total = 0.0
    for u, v in g.edges():
        total += (x[u] + x[v]) ** 2
    return total


def min_perron_entry(result: SpectralResult) -> float:
    return float(result.vector.min())


def eigen_equation_residual(g: graphs.Graph, result: SpectralResult, u: int) -> float:
    """|(q - d(u)) x_u - sum_{j ~ u} x_j| for the reported eigenpair."""
    x = result.vector
    s = sum(x[j] for j in g.neighbors(u))
    return abs((result.value - g.degree(u)) * x[u] - s)
