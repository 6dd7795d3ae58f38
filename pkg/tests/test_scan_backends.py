"""The compiled kernel and the pure fallback must be interchangeable."""

import numpy as np
import pytest

from rtidnc import _scan_py
from rtidnc._scan import BACKEND, scan_columns
from rtidnc.sideinfo import SideInfoMatrix
from rtidnc.solvers import _column_masks

from helpers import window_scan_reference


def random_columns(rng, n, m, p):
    matrix = SideInfoMatrix.from_rows((rng.random((n, m)) < p).astype(int).tolist())
    return matrix, _column_masks(matrix)


def test_backend_reported():
    assert BACKEND in ("c-kernel", "pure-python")


def test_fallback_matches_literal_reference():
    """The pruned walk returns exactly what the plain nested loops return."""
    rng = np.random.default_rng(60)
    for _ in range(200):
        n, m = int(rng.integers(1, 8)), int(rng.integers(1, 8))
        matrix, cols = random_columns(rng, n, m, float(rng.uniform(0.1, 0.9)))
        lo = int(rng.integers(1, m + 1))
        hi = int(rng.integers(lo, m + 1))
        assert _scan_py.scan(cols, n, lo, hi) == window_scan_reference(matrix, lo, hi)


def test_selected_backend_matches_fallback():
    rng = np.random.default_rng(61)
    for _ in range(400):
        n, m = int(rng.integers(1, 14)), int(rng.integers(1, 14))
        _, cols = random_columns(rng, n, m, float(rng.uniform(0.05, 0.95)))
        lo = int(rng.integers(1, m + 1))
        hi = int(rng.integers(lo, m + 1))
        assert scan_columns(cols, n, lo, hi) == _scan_py.scan(cols, n, lo, hi)


def test_backends_agree_beyond_one_word():
    """Row sets wider than 64 bits exercise the multi-word kernel path."""
    rng = np.random.default_rng(62)
    for _ in range(40):
        n = int(rng.integers(65, 150))
        m = int(rng.integers(2, 8))
        _, cols = random_columns(rng, n, m, 0.5)
        assert scan_columns(cols, n, 1, m) == _scan_py.scan(cols, n, 1, m)


def test_window_wider_than_columns_is_clamped():
    _, cols = random_columns(np.random.default_rng(63), 5, 4, 0.5)
    assert scan_columns(cols, 5, 1, 10) == _scan_py.scan(cols, 5, 1, 4)


def test_bad_window_rejected():
    with pytest.raises(ValueError):
        _scan_py.scan([1], 1, 0, 1)
    with pytest.raises(ValueError):
        _scan_py.scan([1], 1, 2, 1)


@pytest.mark.skipif(BACKEND != "c-kernel", reason="compiled kernel not built")
def test_kernel_importable_and_fast_path_used():
    from rtidnc import _kernel

    packed = np.zeros((3, 1), dtype=np.uint64)
    packed[0, 0] = 0b011
    packed[1, 0] = 0b110
    packed[2, 0] = 0b101
    count, cols = _kernel.scan(packed, 3, 1, 3)
    assert count == 2 and cols == (0,)
