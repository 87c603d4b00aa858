"""Optional numba acceleration.

Hot kernels live in ``qturan._kernels`` and are compiled with numba unless
the environment variable ``QTURAN_PURE_PYTHON`` is set to a truthy value
(``1``, ``true``, ``yes``), in which case the same source runs as plain
Python over numpy scalars.  ``benchmarks/bench_kernels.py`` compares both.
"""

from __future__ import annotations

import os

_FLAG = os.environ.get("QTURAN_PURE_PYTHON", "").strip().lower()
PURE_PYTHON_REQUESTED = _FLAG in {"1", "true", "yes", "on"}

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    numba = None
    HAVE_NUMBA = False

NUMBA_ENABLED = HAVE_NUMBA and not PURE_PYTHON_REQUESTED


def jit_kernel(fn):
    """Compile ``fn`` with numba if available, else return it unchanged."""
    if not HAVE_NUMBA:  # pragma: no cover
        return fn
    return numba.njit(cache=True, nogil=True)(fn)
