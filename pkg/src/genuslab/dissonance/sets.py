"""Arithmetic progressions A[u:v:w] and exact windowed evaluation of set expressions.

``S + T`` and ``S - T`` are elementwise sum and difference sets, never set
difference.  Infinite progressions are realized only over the range a
window actually needs: for (S - T) ∩ [lo, hi], S is enumerated over
[lo + min T, hi + max T] and T over [min S - hi, max S - lo].
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .kernels import diff_mask, sum_mask

INF = math.inf


class WindowError(ValueError):
    """A set expression cannot be realized exactly on a finite window."""


@dataclass(frozen=True)
class WindowSet:
    """Sorted integers of a set within the closed window [lo, hi]."""

    lo: int
    hi: int
    elements: tuple[int, ...]

    @classmethod
    def from_mask(cls, mask: np.ndarray, lo: int, hi: int) -> "WindowSet":
        return cls(lo, hi, tuple(int(x) + lo for x in np.flatnonzero(mask)))

    @classmethod
    def from_iterable(cls, xs, lo: int, hi: int) -> "WindowSet":
        return cls(lo, hi, tuple(sorted({int(x) for x in xs if lo <= x <= hi})))

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("window lo must be <= hi")
        els = self.elements
        if any(b <= a for a, b in zip(els, els[1:])):
            raise ValueError("elements must be strictly increasing")
        if els and (els[0] < self.lo or els[-1] > self.hi):
            raise ValueError("elements outside window")

    def __contains__(self, x) -> bool:
        return x in self.as_set()

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def as_set(self) -> frozenset[int]:
        return frozenset(self.elements)

    def array(self) -> np.ndarray:
        return np.asarray(self.elements, dtype=np.int64)

    def restrict(self, lo: int, hi: int) -> "WindowSet":
        return WindowSet.from_iterable(self.elements, lo, hi)

    def runs(self) -> list[tuple[int, int]]:
        """Maximal runs of consecutive integers as (first, last) pairs."""
        out: list[tuple[int, int]] = []
        for x in self.elements:
            if out and x == out[-1][1] + 1:
                out[-1] = (out[-1][0], x)
            else:
                out.append((x, x))
        return out

    def to_record(self) -> dict:
        return {"lo": self.lo, "hi": self.hi, "elements": list(self.elements)}


class SetExpr:
    """Node of a set expression.  Subclasses report ``min``/``max`` bounds (possibly infinite)."""

    min: float
    max: float

    def __add__(self, other: "SetExpr") -> "SetExpr":
        return Sum(self, _lift(other))

    def __sub__(self, other) -> "SetExpr":
        return Diff(self, _lift(other))

    def __or__(self, other: "SetExpr") -> "SetExpr":
        return Union_(self, _lift(other))

    def naturals(self) -> "SetExpr":
        return IntersectN(self)

    def window(self, lo: int, hi: int) -> WindowSet:
        return eval_window(self, lo, hi)


def _lift(x) -> SetExpr:
    if isinstance(x, SetExpr):
        return x
    if isinstance(x, int):
        return APSet(x, 0, x)
    raise TypeError(f"cannot use {x!r} as a set")


@dataclass(frozen=True)
class APSet(SetExpr):
    """A[u:v:w] = {u, u+v, ..., w}; w may be ``INF``; v = 0 means the singleton {u}."""

    u: int
    v: int
    w: Union[int, float]

    def __post_init__(self):
        if self.v < 0:
            raise ValueError("step v must be >= 0")
        if self.v == 0:
            if self.w != self.u:
                raise ValueError(f"A[{self.u}:0:{self.w}] is only defined as the singleton w = u")
        elif self.w != INF:
            if self.w < self.u or (self.w - self.u) % self.v:
                raise ValueError(f"A[{self.u}:{self.v}:{self.w}] is ill-formed: w - u must be a non-negative multiple of v")

    @property
    def min(self):
        return self.u

    @property
    def max(self):
        return self.w

    def elements_in(self, lo, hi) -> np.ndarray:
        lo = max(lo, self.u)
        hi = min(hi, self.w)
        if lo > hi:
            return np.zeros(0, dtype=np.int64)
        if self.v == 0:
            return np.array([self.u], dtype=np.int64)
        first = self.u + -(-(lo - self.u) // self.v) * self.v
        if first > hi:
            return np.zeros(0, dtype=np.int64)
        return np.arange(first, int(hi) + 1, self.v, dtype=np.int64)

    def __repr__(self):
        w = "inf" if self.w == INF else self.w
        return f"A[{self.u}:{self.v}:{w}]"


@dataclass(frozen=True, eq=False)
class Sum(SetExpr):
    left: SetExpr
    right: SetExpr

    @property
    def min(self):
        return self.left.min + self.right.min

    @property
    def max(self):
        return self.left.max + self.right.max

    def __repr__(self):
        return f"({self.left!r} + {self.right!r})"


@dataclass(frozen=True, eq=False)
class Diff(SetExpr):
    left: SetExpr
    right: SetExpr

    @property
    def min(self):
        return self.left.min - self.right.max

    @property
    def max(self):
        return self.left.max - self.right.min

    def __repr__(self):
        return f"({self.left!r} - {self.right!r})"


@dataclass(frozen=True, eq=False)
class Union_(SetExpr):
    left: SetExpr
    right: SetExpr

    @property
    def min(self):
        return min(self.left.min, self.right.min)

    @property
    def max(self):
        return max(self.left.max, self.right.max)

    def __repr__(self):
        return f"({self.left!r} | {self.right!r})"


@dataclass(frozen=True, eq=False)
class IntersectN(SetExpr):
    inner: SetExpr

    @property
    def min(self):
        return max(0, self.inner.min)

    @property
    def max(self):
        return self.inner.max

    def __repr__(self):
        return f"({self.inner!r} ∩ N)"


def _finite(x) -> bool:
    return not math.isinf(x)


def _realize(expr: SetExpr, lo, hi) -> np.ndarray:
    """Sorted int64 array of expr ∩ [lo, hi]; lo/hi may be infinite only where the set is bounded."""
    lo = max(lo, expr.min)
    hi = min(hi, expr.max)
    if lo > hi:
        return np.zeros(0, dtype=np.int64)
    if not (_finite(lo) and _finite(hi)):
        raise WindowError(f"{expr!r} is unbounded on the requested window")
    lo, hi = int(lo), int(hi)
    if isinstance(expr, APSet):
        return expr.elements_in(lo, hi)
    if isinstance(expr, IntersectN):
        return _realize(expr.inner, max(lo, 0), hi)
    if isinstance(expr, Union_):
        return np.union1d(_realize(expr.left, lo, hi), _realize(expr.right, lo, hi))
    if isinstance(expr, Sum):
        s, t = expr.left, expr.right
        a = _realize(s, lo - t.max, hi - t.min)
        b = _realize(t, lo - s.max, hi - s.min)
        return lo + np.flatnonzero(sum_mask(a, b, lo, hi))
    if isinstance(expr, Diff):
        s, t = expr.left, expr.right
        a = _realize(s, lo + t.min, hi + t.max)
        b = _realize(t, s.min - hi, s.max - lo)
        return lo + np.flatnonzero(diff_mask(a, b, lo, hi))
    raise TypeError(f"unknown set expression node {expr!r}")


def eval_window(expr: SetExpr, lo: int, hi: int) -> WindowSet:
    """Exact realization of ``expr ∩ [lo, hi]``.

    Raises WindowError when a needed operand range is unbounded, e.g. the
    difference of two sets that are both infinite above.
    """
    if lo > hi:
        raise ValueError("lo must be <= hi")
    arr = _realize(expr, lo, hi)
    return WindowSet(int(lo), int(hi), tuple(int(x) for x in arr))


def A(u: int, v: int, w) -> APSet:
    return APSet(u, v, w)
