"""Turán graphs, complete multipartite graphs and their part-size partitions."""

from __future__ import annotations

from itertools import islice
from typing import Iterator, Sequence

from .graph import MAX_VERTICES, Graph, GraphError

PartSizes = tuple[int, ...]


def normalize_parts(sizes: Sequence[int]) -> PartSizes:
    """Canonical (nonincreasing) representative; every class must be nonempty."""
    if any(t < 1 for t in sizes):
        raise ValueError(f"part sizes must be positive, got {tuple(sizes)}")
    return tuple(sorted(sizes, reverse=True))


def turan_parts(n: int, r: int) -> PartSizes:
    """Balanced class sizes of T_r(n), larger classes first."""
    if not 1 <= r <= n:
        raise ValueError(f"Turán graph needs 1 <= r <= n, got r={r}, n={n}")
    q, extra = divmod(n, r)
    return (q + 1,) * extra + (q,) * (r - extra)


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph; class ``i`` occupies a consecutive block of labels."""
    sizes = tuple(sizes)
    if any(t < 1 for t in sizes):
        raise ValueError(f"part sizes must be positive, got {sizes}")
    n = sum(sizes)
    if n > MAX_VERTICES:
        raise GraphError(f"{n} vertices exceeds the capacity of {MAX_VERTICES}")
    full = (1 << n) - 1
    rows = []
    start = 0
    for t in sizes:
        block = ((1 << t) - 1) << start
        rows.extend([full & ~block] * t)
        start += t
    return Graph(n, tuple(rows))


def turan_graph(n: int, r: int) -> Graph:
    return complete_multipartite(turan_parts(n, r))


def turan_edge_count(n: int, r: int) -> int:
    parts = turan_parts(n, r)
    return (n * n - sum(t * t for t in parts)) // 2


def _partitions(n: int, r: int, cap: int) -> Iterator[PartSizes]:
    if r == 0:
        if n == 0:
            yield ()
        return
    # the largest remaining part is at least ceil(n / r)
    for first in range(min(cap, n - (r - 1)), -(-n // r) - 1, -1):
        for rest in _partitions(n - first, r - 1, first):
            yield (first,) + rest


def compositions(n: int, r: int, start: int = 0, stop: int | None = None) -> Iterator[PartSizes]:
    """Partitions of ``n`` into exactly ``r`` positive nonincreasing parts.

    The stream order is fixed (lexicographically decreasing), so workers
    can split it by index range with ``start``/``stop``.
    """
    if r < 1 or n < r:
        return iter(())
    return islice(_partitions(n, r, n), start, stop)
