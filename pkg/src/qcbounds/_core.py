"""Kernel backend selection.

The compiled extension is preferred; setting the environment variable
``QCBOUNDS_PURE_PYTHON=1`` forces the pure-Python fallback.
"""

from __future__ import annotations

import os

BACKEND = "python"

if not os.environ.get("QCBOUNDS_PURE_PYTHON"):
    try:
        from qcbounds._kernels import cyclic_mul, gray_min_weight

        BACKEND = "cython"
    except ImportError:
        pass

if BACKEND == "python":
    from qcbounds._pykernels import cyclic_mul, gray_min_weight

__all__ = ["BACKEND", "cyclic_mul", "gray_min_weight"]
