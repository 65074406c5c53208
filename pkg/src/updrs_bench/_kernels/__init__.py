"""Hot numeric kernels with two interchangeable backends.

The compiled Cython module is used when it was built; otherwise the NumPy
fallback takes over. Set ``UPDRS_BENCH_PURE_PYTHON=1`` to force the fallback
(used by the kernel benchmark and the backend-agreement tests).
"""

import os

from ._py import SPLIT_SD, SPLIT_VARIANCE

if os.environ.get("UPDRS_BENCH_PURE_PYTHON", "").strip() not in ("", "0"):
    from ._py import BACKEND, best_split, manhattan_distances
else:
    try:
        from ._cy import BACKEND, best_split, manhattan_distances
    except ImportError:
        from ._py import BACKEND, best_split, manhattan_distances

__all__ = [
    "BACKEND",
    "SPLIT_SD",
    "SPLIT_VARIANCE",
    "best_split",
    "manhattan_distances",
]
