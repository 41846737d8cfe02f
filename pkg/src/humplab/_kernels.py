"""Exhaustive path-walk kernels.

Both backends visit every admissible path one by one (no state merging), so
the returned path count is a genuine enumeration, not a transfer-matrix sum.

Backend selection: ``HUMPLAB_BACKEND=numba|numpy``. The default is numba
when it imports, else numpy.
"""
from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

__all__ = ["HAVE_NUMBA", "BACKENDS", "default_backend", "walk", "walk_numba", "walk_numpy"]

BACKENDS = ("numba", "numpy")

# step codes in enumeration order
UP, FLAT, DOWN = 0, 1, 2

# numpy frontier rows processed at once before splitting
CHUNK = 1 << 20


def default_backend() -> str:
    want = os.environ.get("HUMPLAB_BACKEND", "").strip().lower()
    if want and want not in BACKENDS:
        raise ValueError(f"HUMPLAB_BACKEND must be one of {BACKENDS}, got {want!r}")
    if want == "numpy" or not HAVE_NUMBA:
        return "numpy"
    return "numba"


def _walk_py(length, allow_flat, allow_negative, checkpoint):
    if length == 0:
        return 1, 0
    height = np.zeros(length + 1, np.int64)
    pend = np.zeros(length + 1, np.int64)
    humps = np.zeros(length + 1, np.int64)
    nxt = np.zeros(length + 1, np.int64)
    count = 0
    total = 0
    d = 0
    while d >= 0:
        c = nxt[d]
        if c == 3:
            d -= 1
            continue
        nxt[d] = c + 1
        if c == FLAT and not allow_flat:
            continue
        if c == UP:
            h = height[d] + 1
        elif c == FLAT:
            h = height[d]
        else:
            h = height[d] - 1
        if h < 0 and not allow_negative:
            continue
        pos = d + 1
        target = checkpoint if 0 <= checkpoint and pos <= checkpoint else length
        if abs(h) > target - pos:
            continue
        if c == UP:
            p = 1
            hm = humps[d]
        elif c == FLAT:
            p = pend[d]
            hm = humps[d]
        else:
            p = 0
            hm = humps[d] + pend[d]
        if pos == length:
            count += 1
            total += hm
            continue
        d = pos
        height[d] = h
        pend[d] = p
        humps[d] = hm
        nxt[d] = 0
    return count, total


if HAVE_NUMBA:
    walk_numba = njit(cache=True, nogil=True)(_walk_py)
else:  # pragma: no cover
    walk_numba = _walk_py


def _expand(h, p, hm, pos, length, allow_flat, allow_negative, checkpoint):
    target = checkpoint if 0 <= checkpoint and pos <= checkpoint else length
    room = target - pos
    hs, ps, hms = [], [], []
    # up
    nh = h + 1
    ok = np.abs(nh) <= room
    hs.append(nh[ok]); ps.append(np.ones(int(ok.sum()), np.int64)); hms.append(hm[ok])
    if allow_flat:
        ok = np.abs(h) <= room
        hs.append(h[ok]); ps.append(p[ok]); hms.append(hm[ok])
    nh = h - 1
    ok = np.abs(nh) <= room
    if not allow_negative:
        ok &= nh >= 0
    hs.append(nh[ok]); ps.append(np.zeros(int(ok.sum()), np.int64)); hms.append(hm[ok] + p[ok])
    return np.concatenate(hs), np.concatenate(ps), np.concatenate(hms)


def _walk_frontier(h, p, hm, pos, length, allow_flat, allow_negative, checkpoint):
    while pos < length:
        if len(h) > CHUNK:
            mid = len(h) // 2
            a = _walk_frontier(h[:mid], p[:mid], hm[:mid], pos, length, allow_flat, allow_negative, checkpoint)
            b = _walk_frontier(h[mid:], p[mid:], hm[mid:], pos, length, allow_flat, allow_negative, checkpoint)
            return a[0] + b[0], a[1] + b[1]
        pos += 1
        h, p, hm = _expand(h, p, hm, pos, length, allow_flat, allow_negative, checkpoint)
    return len(h), int(hm.sum())


def walk_numpy(length, allow_flat, allow_negative, checkpoint):
    """Level-by-level frontier expansion, one array row per path prefix."""
    zero = np.zeros(1, np.int64)
    return _walk_frontier(zero, zero.copy(), zero.copy(), 0, length,
                          bool(allow_flat), bool(allow_negative), int(checkpoint))


def walk(length: int, allow_flat: bool, allow_negative: bool, checkpoint: int = -1,
         backend: str | None = None) -> tuple[int, int]:
    """Count paths of ``length`` returning to height 0, and their total humps.

    ``checkpoint`` >= 0 additionally forces height 0 at that position. With
    ``allow_negative`` the hump total is meaningless and should be ignored.
    """
    backend = backend or default_backend()
    if backend == "numba":
        count, total = walk_numba(int(length), bool(allow_flat), bool(allow_negative), int(checkpoint))
    elif backend == "numpy":
        count, total = walk_numpy(length, allow_flat, allow_negative, checkpoint)
    else:
        raise ValueError(f"unknown backend {backend!r}")
    return int(count), int(total)
