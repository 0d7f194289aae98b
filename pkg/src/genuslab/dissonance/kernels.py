"""Integer set kernels over finite windows.

Each kernel has a numba version and a numpy version with identical results.
The public names dispatch on ``genuslab._numba.USE_NUMBA``.  Windows are
boolean masks: ``mask[k]`` means ``lo + k`` is in the set.
"""
from __future__ import annotations

import numpy as np

from .. import _numba
from .._numba import njit


@njit(cache=True)
def _sum_mask_nb(a, b, lo, hi):
    out = np.zeros(hi - lo + 1, dtype=np.bool_)
    for i in range(a.shape[0]):
        for j in range(b.shape[0]):
            t = a[i] + b[j]
            if lo <= t <= hi:
                out[t - lo] = True
    return out


@njit(cache=True)
def _diff_mask_nb(a, b, lo, hi):
    out = np.zeros(hi - lo + 1, dtype=np.bool_)
    for i in range(a.shape[0]):
        for j in range(b.shape[0]):
            t = a[i] - b[j]
            if lo <= t <= hi:
                out[t - lo] = True
    return out


@njit(cache=True)
def _monoid_mask_nb(gens, bound):
    reach = np.zeros(bound + 1, dtype=np.bool_)
    reach[0] = True
    for x in range(1, bound + 1):
        for k in range(gens.shape[0]):
            g = gens[k]
            if 0 < g <= x and reach[x - g]:
                reach[x] = True
                break
    return reach


def _pairwise_mask_np(a, b, lo, hi, sign):
    out = np.zeros(hi - lo + 1, dtype=np.bool_)
    if a.size == 0 or b.size == 0:
        return out
    # chunk rows so the outer product stays small
    step = max(1, 4_000_000 // max(1, b.size))
    for start in range(0, a.size, step):
        t = (a[start:start + step, None] + sign * b[None, :]).ravel()
        t = t[(t >= lo) & (t <= hi)]
        out[t - lo] = True
    return out


def _sum_mask_np(a, b, lo, hi):
    return _pairwise_mask_np(a, b, lo, hi, 1)


def _diff_mask_np(a, b, lo, hi):
    return _pairwise_mask_np(a, b, lo, hi, -1)


def _monoid_mask_np(gens, bound):
    reach = np.zeros(bound + 1, dtype=np.bool_)
    reach[0] = True
    g = np.unique(gens[(gens > 0) & (gens <= bound)])
    frontier = np.array([0], dtype=np.int64)
    while frontier.size and g.size:
        t = (frontier[:, None] + g[None, :]).ravel()
        t = np.unique(t[t <= bound])
        t = t[~reach[t]]
        reach[t] = True
        frontier = t
    return reach


def _as_i64(x) -> np.ndarray:
    return np.ascontiguousarray(np.asarray(x, dtype=np.int64).ravel())


def sum_mask(a, b, lo: int, hi: int, use_numba: bool | None = None) -> np.ndarray:
    """Mask over [lo, hi] of {x + y : x in a, y in b}."""
    if hi < lo:
        return np.zeros(0, dtype=np.bool_)
    fn = _sum_mask_nb if _pick(use_numba) else _sum_mask_np
    return fn(_as_i64(a), _as_i64(b), int(lo), int(hi))


def diff_mask(a, b, lo: int, hi: int, use_numba: bool | None = None) -> np.ndarray:
    """Mask over [lo, hi] of {x - y : x in a, y in b}."""
    if hi < lo:
        return np.zeros(0, dtype=np.bool_)
    fn = _diff_mask_nb if _pick(use_numba) else _diff_mask_np
    return fn(_as_i64(a), _as_i64(b), int(lo), int(hi))


def monoid_mask(gens, bound: int, use_numba: bool | None = None) -> np.ndarray:
    """Mask over [0, bound] of the additive monoid generated by ``gens``."""
    if bound < 0:
        raise ValueError("bound must be >= 0")
    fn = _monoid_mask_nb if _pick(use_numba) else _monoid_mask_np
    return fn(np.sort(_as_i64(gens)), int(bound))


def _pick(use_numba: bool | None) -> bool:
    if use_numba is None:
        return _numba.USE_NUMBA
    if use_numba and not _numba.HAVE_NUMBA:
        raise RuntimeError("numba is not installed")
    return use_numba


def backend() -> str:
    return "numba" if _numba.USE_NUMBA else "numpy"
