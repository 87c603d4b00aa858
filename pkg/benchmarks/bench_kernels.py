"""Compare the numba kernels against their pure-Python fallbacks.

Run:  python3 benchmarks/bench_kernels.py
Both variants are importable side by side, so no env juggling is needed;
setting QTURAN_PURE_PYTHON=1 only changes which one the package itself uses.
"""

import time

import numpy as np

from qturan import graphs, patterns
from qturan._accel import NUMBA_ENABLED
from qturan._kernels import (
    power_iteration_jit,
    power_iteration_py,
    subgraph_search_jit,
    subgraph_search_py,
)


def _time(fn, *args, repeat=200):
    fn(*args)  # warm-up / compile
    best = float("inf")
    for _ in range(5):
        t0 = time.perf_counter()
        for _ in range(repeat):
            fn(*args)
        best = min(best, (time.perf_counter() - t0) / repeat)
    return best


def bench_match():
    rng = np.random.default_rng(7)
    host = graphs.random_graph(24, 0.4, rng)
    host_adj = np.array(host.adj, dtype=np.uint64)
    host_deg = np.array([r.bit_count() for r in host.adj], dtype=np.int64)
    full = np.uint64((1 << host.n) - 1)
    print(f"subgraph search, host n={host.n} e={host.edge_count()}")
    for name in ("K4", "C5", "petersen"):
        pg = patterns.pattern_by_name(name).graph
        pat_adj = np.array(pg.adj, dtype=np.uint64)
        deg = np.array([pg.degree(v) for v in range(pg.n)], dtype=np.int64)
        order = np.array(
            sorted(range(pg.n), key=lambda v: -pg.degree(v)), dtype=np.int64
        )
        args = (host_adj, host_deg, pat_adj, deg, order, full)
        t_py = _time(subgraph_search_py, *args)
        t_jit = _time(subgraph_search_jit, *args)
        print(
            f"  {name:9s} python {t_py * 1e6:9.1f} us   "
            f"numba {t_jit * 1e6:9.1f} us   speedup {t_py / t_jit:6.1f}x"
        )


def bench_power():
    print("power iteration on Q(G), tol 1e-10")
    for n in (16, 64, 200):
        a = graphs.turan_matrix(2, n)
        q = a + np.diag(a.sum(axis=1))
        x0 = a.sum(axis=1) + 1.0
        args = (q, x0, 1e-10, 10000)
        t_py = _time(power_iteration_py, *args, repeat=50)
        t_jit = _time(power_iteration_jit, *args, repeat=50)
        print(
            f"  n={n:4d}    python {t_py * 1e6:9.1f} us   "
            f"numba {t_jit * 1e6:9.1f} us   speedup {t_py / t_jit:6.1f}x"
        )


if __name__ == "__main__":
    print(f"numba active in package: {NUMBA_ENABLED}")
    bench_match()
    bench_power()
