"""Batch kernels for exhaustive enumeration over height grids.

The numba versions are used when numba imports and ``CATALANIA_NO_NUMBA`` is
unset (or "0").  The fallback filters with vectorised numpy and depletes with
the scalar routine from :mod:`catalania.diagram`.
"""

from __future__ import annotations

import os

import numpy as np

from . import diagram

try:
    from numba import config as _numba_config, njit, prange
    HAVE_NUMBA = True
    # the bundled TBB is too old and numba warns on every parallel launch
    if not os.environ.get("NUMBA_THREADING_LAYER"):
        _numba_config.THREADING_LAYER = "workqueue"
except ImportError:  # pragma: no cover - depends on the environment
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get("CATALANIA_NO_NUMBA", "0") in ("", "0")


def candidate_grid(order: int, top: int) -> np.ndarray:
    """All height vectors in [0..top]^order, lexicographic, as an int64 array."""
    base = top + 1
    idx = np.arange(base ** order, dtype=np.int64)
    out = np.empty((idx.size, order), dtype=np.int64)
    for col in range(order - 1, -1, -1):
        out[:, col] = idx % base
        idx //= base
    return out


# -- numpy reference path -------------------------------------------------


def boundary_mask_numpy(grid: np.ndarray) -> np.ndarray:
    grid = np.asarray(grid, dtype=np.int64)
    top = grid.max(axis=1, keepdims=True)
    prev = np.maximum.accumulate(grid, axis=1)
    prev = np.concatenate([np.full_like(grid[:, :1], -1), prev[:, :-1]], axis=1)
    left = grid > prev
    nxt = np.maximum.accumulate(grid[:, ::-1], axis=1)
    nxt = np.concatenate([np.full_like(grid[:, :1], -1), nxt[:, :-1]], axis=1)[:, ::-1]
    right = grid > nxt
    odd = grid % 2 == 1
    at_top = grid == top
    bad_left = left & odd & ~at_top
    bad_right = right & ~odd & ~at_top
    return ~(bad_left | bad_right).any(axis=1)


def deplete_numpy(grid: np.ndarray) -> np.ndarray:
    out = np.empty_like(np.asarray(grid, dtype=np.int64))
    for n, row in enumerate(grid):
        out[n] = diagram._deplete(tuple(int(x) for x in row))
    return out


# -- numba path -----------------------------------------------------------


if HAVE_NUMBA:

    @njit(cache=True)
    def _bc_row(h):
        n = h.shape[0]
        top = 0
        for i in range(n):
            if h[i] > top:
                top = h[i]
        run = -1
        for i in range(n):
            if h[i] > run:
                if h[i] % 2 == 1 and h[i] != top:
                    return False
                run = h[i]
        run = -1
        for i in range(n - 1, -1, -1):
            if h[i] > run:
                if h[i] % 2 == 0 and h[i] != top:
                    return False
                run = h[i]
        return True

    @njit(cache=True)
    def _domino_ok(h, i):
        n = h.shape[0]
        low = h[i]
        if low % 2 == 0:
            for k in range(i + 1, n):
                if h[k] >= low + 1:
                    return h[k] >= low + 2
        else:
            for k in range(i - 1, -1, -1):
                if h[k] >= low + 1:
                    return h[k] >= low + 2
        return False

    @njit(cache=True)
    def _deplete_row(h):
        n = h.shape[0]
        while True:
            top = 0
            for i in range(n):
                if h[i] > top:
                    top = h[i]
            done = False
            for u in range(top - 1):
                hit = False
                for i in range(n):
                    if h[i] == u + 1:
                        hit = True
                        break
                if not hit:
                    for i in range(n):
                        if h[i] >= u + 2:
                            h[i] -= 2
                    done = True
                    break
            if done:
                continue
            for i in range(n):
                if h[i] >= 2:
                    h[i] -= 2
                    if _domino_ok(h, i) and _bc_row(h):
                        done = True
                        break
                    h[i] += 2
            if done:
                continue
            if top > 0:
                count = 0
                where = 0
                for i in range(n):
                    if h[i] == top:
                        count += 1
                        where = i
                if count == 1:
                    h[where] -= 1
                    continue
            return

    @njit(cache=True, parallel=True)
    def boundary_mask_numba(grid):
        out = np.empty(grid.shape[0], dtype=np.bool_)
        for n in prange(grid.shape[0]):
            out[n] = _bc_row(grid[n])
        return out

    @njit(cache=True, parallel=True)
    def deplete_numba(grid):
        out = grid.copy()
        for n in prange(out.shape[0]):
            _deplete_row(out[n])
        return out


def boundary_mask(grid: np.ndarray, use_numba: bool | None = None) -> np.ndarray:
    if use_numba is None:
        use_numba = USE_NUMBA
    grid = np.ascontiguousarray(grid, dtype=np.int64)
    if use_numba and HAVE_NUMBA:
        return boundary_mask_numba(grid)
    return boundary_mask_numpy(grid)


def deplete_batch(grid: np.ndarray, use_numba: bool | None = None) -> np.ndarray:
    if use_numba is None:
        use_numba = USE_NUMBA
    grid = np.ascontiguousarray(grid, dtype=np.int64)
    if use_numba and HAVE_NUMBA:
        return deplete_numba(grid)
    return deplete_numpy(grid)


def unique_depletes(order: int, top: int, use_numba: bool | None = None) -> np.ndarray:
    """Sorted distinct deplete vectors reached from boundary-valid grid points."""
    grid = candidate_grid(order, top)
    grid = grid[boundary_mask(grid, use_numba)]
    dep = deplete_batch(grid, use_numba)
    return np.unique(dep, axis=0)
