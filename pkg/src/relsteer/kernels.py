"""
Grid kernel selection.

The compiled extension is used when it was built; otherwise the numpy
implementation is used. Setting ``RELSTEER_PURE_PYTHON=1`` forces the
fallback.
"""

import os

from relsteer import _kernels_py

BACKEND = "python"
grid_terms = _kernels_py.grid_terms

if os.environ.get("RELSTEER_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from relsteer import _kernels
    except ImportError:
        pass
    else:
        grid_terms = _kernels.grid_terms
        BACKEND = "cython"

__all__ = ["BACKEND", "grid_terms"]
