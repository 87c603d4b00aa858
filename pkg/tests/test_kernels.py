import numpy as np
import pytest

from qturan import _accel, graphs, patterns, spectra
from qturan._kernels import (
    power_iteration_jit,
    power_iteration_py,
    subgraph_search_jit,
    subgraph_search_py,
)

needs_numba = pytest.mark.skipif(
    not _accel.NUMBA_ENABLED, reason="numba path disabled"
)


def _match_args(host, name):
    pg = patterns.pattern_by_name(name).graph
    host_adj = np.array(host.adj, dtype=np.uint64)
    host_deg = np.array([r.bit_count() for r in host.adj], dtype=np.int64)
    pat_adj = np.array(pg.adj, dtype=np.uint64)
    pat_deg = np.array([pg.degree(v) for v in range(pg.n)], dtype=np.int64)
    order = np.array(
        sorted(range(pg.n), key=lambda v: -pg.degree(v)), dtype=np.int64
    )
    full = np.uint64((1 << host.n) - 1)
    return host_adj, host_deg, pat_adj, pat_deg, order, full


@needs_numba
class TestJitAgreement:
    def test_subgraph_search_random(self):
        rng = np.random.default_rng(31)
        for _ in range(60):
            host = graphs.random_graph(int(rng.integers(3, 15)), 0.4, rng)
            for name in ("K3", "C4", "C5", "K1_3", "K4"):
                args = _match_args(host, name)
                assert subgraph_search_py(*args) == subgraph_search_jit(*args)

    def test_power_iteration_random(self):
        rng = np.random.default_rng(37)
        for _ in range(25):
            g = graphs.random_graph(int(rng.integers(2, 20)), 0.5, rng)
            mat = spectra.matrix_of(g, "q")
            x0 = mat.sum(axis=1) + 1.0
            vp, xp, rp, ip, cp = power_iteration_py(mat, x0, 1e-10, 10000)
            vj, xj, rj, ij, cj = power_iteration_jit(mat, x0, 1e-10, 10000)
            assert vp == pytest.approx(vj, abs=1e-10)
            assert np.allclose(xp, xj, atol=1e-10)
            assert (ip, bool(cp)) == (ij, bool(cj))


class TestFallbackFlag:
    def test_active_kernels_match_flag(self):
        from qturan import _kernels

        if _accel.NUMBA_ENABLED:
            assert _kernels.subgraph_search is subgraph_search_jit
            assert _kernels.power_iteration is power_iteration_jit
        else:
            assert _kernels.subgraph_search is subgraph_search_py
            assert _kernels.power_iteration is power_iteration_py

    def test_pure_python_env_flag(self):
        import subprocess
        import sys

        code = (
            "from qturan import _accel, _kernels, graphs, spectra\n"
            "assert not _accel.NUMBA_ENABLED\n"
            "assert _kernels.subgraph_search is _kernels.subgraph_search_py\n"
            "v = spectra.q_radius(graphs.turan(2, 6))\n"
            "assert abs(v - 6) < 1e-8, v\n"
            "from qturan import patterns\n"
            "assert patterns.contains_subgraph("
            "graphs.complete(4), patterns.pattern_by_name('K3'))\n"
        )
        out = subprocess.run(
            [sys.executable, "-c", code],
            env={"QTURAN_PURE_PYTHON": "1", "PATH": "/usr/bin:/bin"},
            capture_output=True,
            text=True,
        )
        assert out.returncode == 0, out.stderr
