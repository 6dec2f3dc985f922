"""Path counts in complete multipartite graphs and the weak T-property scan."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from . import kernels
from .turan import PartSizes, compositions, turan_parts


def path_embeddings_multipartite(sizes: Sequence[int], ell: int, backend: str | None = None) -> int:
    """Embeddings of the path on ``ell`` vertices into ``K(sizes)``.

    Sums, over class sequences with no two consecutive classes equal, the
    product of falling factorials ``t_c (t_c - 1) ... (t_c - m_c + 1)``
    where ``m_c`` is how often class ``c`` occurs in the sequence.
    """
    if ell < 1:
        raise ValueError("path needs at least one vertex")
    if any(t < 0 for t in sizes):
        raise ValueError("part sizes must be nonnegative")
    return kernels.path_embeddings([t for t in sizes if t > 0], ell, backend=backend)


def path_copies_multipartite(sizes: Sequence[int], ell: int) -> int:
    emb = path_embeddings_multipartite(sizes, ell)
    return emb // 2 if ell >= 2 else emb


@dataclass
class WeakTReport:
    ell: int
    k: int
    n: int
    balanced: PartSizes
    balanced_value: int
    max_value: int
    maximizers: list[PartSizes]
    compositions_scanned: int
    values: dict[PartSizes, int] = field(default_factory=dict, repr=False)

    @property
    def balanced_is_unique_maximizer(self) -> bool:
        return self.maximizers == [self.balanced]


def _scan_chunk(args: tuple) -> list[tuple[PartSizes, int]]:
    ell, r, n, start, stop = args
    return [(p, path_embeddings_multipartite(p, ell)) for p in compositions(n, r, start, stop)]


def weak_t_check(ell: int, k: int, n: int, *, workers: int = 1, keep_values: bool = False) -> WeakTReport:
    """Maximise the number of P_ell embeddings over complete (k-1)-partite graphs on n vertices."""
    if ell < 2 or k < 3 or n < k - 1:
        raise ValueError("weak T-check needs ell >= 2, k >= 3 and n >= k - 1")
    r = k - 1
    if workers > 1:
        total = sum(1 for _ in compositions(n, r))
        step = -(-total // workers)
        jobs = [(ell, r, n, s, s + step) for s in range(0, total, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = [row for chunk in pool.map(_scan_chunk, jobs) for row in chunk]
    else:
        rows = _scan_chunk((ell, r, n, 0, None))
    best = max(v for _, v in rows)
    balanced = turan_parts(n, r)
    values = dict(rows)
    return WeakTReport(
        ell=ell,
        k=k,
        n=n,
        balanced=balanced,
        balanced_value=values[balanced],
        max_value=best,
        maximizers=[p for p, v in rows if v == best],
        compositions_scanned=len(rows),
        values=values if keep_values else {},
    )
