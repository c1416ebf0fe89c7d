"""Kernel selection: compiled extension when available, pure fallback.

Set GERMTOOLS_PURE=1 to force the pure-Python kernels regardless of what
is installed.
"""

from __future__ import annotations

import os

if os.environ.get("GERMTOOLS_PURE") == "1":
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as kernels

terms_mul = kernels.terms_mul
row_reduce = kernels.row_reduce
vec_reduces_to_zero = kernels.vec_reduces_to_zero
BACKEND: str = kernels.BACKEND
