"""Selects the subset-scan backend: compiled kernel if built, else pure Python.

Set RTIDNC_PURE=1 before import to force the fallback (used by the
benchmark and by tests that exercise both paths).
"""

from __future__ import annotations

import os
from typing import Sequence

from . import _scan_py

if os.environ.get("RTIDNC_PURE"):
    _kernel = None
else:
    try:
        from . import _kernel  # type: ignore[attr-defined]
    except ImportError:
        _kernel = None

BACKEND = "c-kernel" if _kernel is not None else "pure-python"


def scan_columns(columns: Sequence[int], n_rows: int, lo: int, hi: int) -> tuple[int, tuple[int, ...]]:
    """Dispatch a scan over column bit masks (bit i-1 = user i wants it)."""
    hi = min(hi, len(columns))
    if _kernel is None:
        return _scan_py.scan(columns, n_rows, lo, hi)
    import numpy as np

    words = (n_rows + 63) // 64
    packed = np.zeros((len(columns), words), dtype=np.uint64)
    for c, mask in enumerate(columns):
        for w in range(words):
            packed[c, w] = (mask >> (64 * w)) & 0xFFFFFFFFFFFFFFFF
    return _kernel.scan(packed, n_rows, lo, hi)
