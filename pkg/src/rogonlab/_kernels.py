"""Kernel backend selection: compiled extension if available, NumPy otherwise.

``ROGONLAB_THREADS`` caps internal parallelism; the current kernels are
serial, so the cap is read and recorded but has no effect.
"""

from __future__ import annotations

import os

try:
    from ._kernels_cy import BACKEND, nonlinear_phase, rogon_grid  # noqa: F401
except ImportError:  # pragma: no cover - exercised only on pure-Python installs
    from ._kernels_np import BACKEND, nonlinear_phase, rogon_grid  # noqa: F401


def thread_cap() -> int | None:
    raw = os.environ.get("ROGONLAB_THREADS")
    if raw is None:
        return None
    try:
        n = int(raw)
    except ValueError:
        return None
    return max(1, n)
