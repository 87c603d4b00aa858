"""Hot inner loops: bitmask subgraph matching and power iteration.

Each kernel is written once in numba-compatible form.  The ``*_py`` name is
the plain-Python reference, the ``*_jit`` name the compiled version; the
unsuffixed name is whichever of the two is active (see ``qturan._accel``).
All bitmasks are ``uint64``, so hosts are limited to 64 vertices.
"""

from __future__ import annotations

import numpy as np

from ._accel import NUMBA_ENABLED, jit_kernel


def _subgraph_search_impl(host_adj, host_deg, pat_adj, pat_deg, order, first_mask):
    """Backtracking injective-homomorphism search over bitmask rows.

    ``order`` fixes the assignment order of pattern vertices; candidates for
    pattern slot d+1 are intersected with the host neighborhoods of every
    already-placed pattern neighbor.  ``first_mask`` restricts the host
    candidates of ``order[0]`` (used to anchor the new vertex during
    augmentation; pass an all-ones mask for an unrestricted search).
    """
    n_h = host_adj.shape[0]
    k = order.shape[0]
    one = np.uint64(1)
    zero = np.uint64(0)
    if k > n_h:
        return False
    allowed = np.zeros(k, np.uint64)
    for d in range(k):
        pv = order[d]
        m = zero
        for v in range(n_h):
            if host_deg[v] >= pat_deg[pv]:
                m |= one << np.uint64(v)
        allowed[d] = m
    assign = np.zeros(k, np.int64)
    cands = np.zeros(k, np.uint64)
    cands[0] = allowed[0] & first_mask
    used = zero
    d = 0
    while d >= 0:
        if cands[d] == zero:
            d -= 1
            if d >= 0:
                used &= ~(one << np.uint64(assign[d]))
            continue
        m = cands[d]
        v = 0
        while (m >> np.uint64(v)) & one == zero:
            v += 1
        cands[d] = m & ~(one << np.uint64(v))
        if d == k - 1:
            return True
        assign[d] = v
        used |= one << np.uint64(v)
        nm = allowed[d + 1] & ~used
        prow = pat_adj[order[d + 1]]
        for j in range(d + 1):
            if (prow >> np.uint64(order[j])) & one != zero:
                nm &= host_adj[assign[j]]
        d += 1
        cands[d] = nm
    return False


def _power_iteration_impl(mat, x0, tol, max_iter):
    """Dominant eigenpair of a symmetric PSD matrix by power iteration.

    Returns (value, vector, residual, iterations, converged).  Residual is
    the 2-norm of ``mat@x - value*x`` at the reported iterate.
    """
    n = mat.shape[0]
    x = x0 / np.linalg.norm(x0)
    theta = 0.0
    resid = 0.0
    it = 0
    for it in range(max_iter):
        y = mat @ x
        theta = 0.0
        for i in range(n):
            theta += x[i] * y[i]
        r2 = 0.0
        for i in range(n):
            diff = y[i] - theta * x[i]
            r2 += diff * diff
        resid = np.sqrt(r2)
        if resid <= tol:
            return theta, x, resid, it + 1, True
        ny = np.linalg.norm(y)
        if ny == 0.0:
            return 0.0, x, 0.0, it + 1, True
        x = y / ny
    return theta, x, resid, max_iter, False


subgraph_search_py = _subgraph_search_impl
subgraph_search_jit = jit_kernel(_subgraph_search_impl)
subgraph_search = subgraph_search_jit if NUMBA_ENABLED else subgraph_search_py

power_iteration_py = _power_iteration_impl
power_iteration_jit = jit_kernel(_power_iteration_impl)
power_iteration = power_iteration_jit if NUMBA_ENABLED else power_iteration_py
