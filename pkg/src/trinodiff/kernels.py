"""Backend selection for the sweep kernels.

numba-compiled loops are used when numba imports and the environment
variable TRINODIFF_DISABLE_JIT is unset (or "0"); otherwise the pure-numpy
versions are used.  Both backends are importable directly as
``numpy_backend`` and ``numba_backend`` (the latter may be None).
"""

import os

from . import _numpy_kernels as numpy_backend

try:
    from . import _numba_kernels as numba_backend
except ImportError:  # pragma: no cover - numba is optional
    numba_backend = None


def jit_disabled() -> bool:
    return os.environ.get("TRINODIFF_DISABLE_JIT", "0") not in ("", "0")


def _select():
    if numba_backend is not None and not jit_disabled():
        return numba_backend, "numba"
    return numpy_backend, "numpy"


_impl, BACKEND = _select()

difference_counts = _impl.difference_counts
bipoly_grid = _impl.bipoly_grid
bipoly_zero_points = _impl.bipoly_zero_points
fwht = _impl.fwht
walsh_direct = _impl.walsh_direct
code_weights = _impl.code_weights
triple_count = _impl.triple_count
root_counts = _impl.root_counts

__all__ = [
    "BACKEND",
    "numpy_backend",
    "numba_backend",
    "difference_counts",
    "bipoly_grid",
    "bipoly_zero_points",
    "fwht",
    "walsh_direct",
    "code_weights",
    "triple_count",
    "root_counts",
]
