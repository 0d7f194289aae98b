"""Integer partitions as canonical descending tuples.

A partition is stored as a plain ``tuple[int, ...]`` with parts weakly
decreasing; ``()`` is the empty partition of weight 0.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator

Partition = tuple[int, ...]


def partition(parts: Iterable[int]) -> Partition:
    """Canonicalize ``parts`` into a descending tuple; rejects non-positive parts."""
    out = tuple(sorted((int(p) for p in parts), reverse=True))
    if out and out[-1] < 1:
        raise ValueError(f"partition parts must be positive, got {out}")
    return out


def weight(lam: Partition) -> int:
    return sum(lam)


def sort_key(lam: Partition) -> tuple:
    """Canonical total order: by weight, then parts in descending lexicographic order."""
    return (sum(lam), tuple(-p for p in lam))


def merge(a: Partition, b: Partition) -> Partition:
    """Partition of the monomial p_a * p_b."""
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b, reverse=True))


def partitions_of(n: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[Partition]:
    """Yield the partitions of ``n`` in descending lexicographic order."""
    if n < 0:
        return
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n if n > 0 else 0
    if n == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first, max_len - 1):
            yield (first,) + rest


def partitions_up_to(max_weight: int, max_len: int | None = None) -> Iterator[Partition]:
    """Nonempty partitions of weight 1..max_weight, in canonical order."""
    for n in range(1, max_weight + 1):
        yield from partitions_of(n, max_len=max_len)


def multiplicities(lam: Partition) -> dict[int, int]:
    m: dict[int, int] = {}
    for p in lam:
        m[p] = m.get(p, 0) + 1
    return m
