"""Embedding search plans shared by containment tests and counting."""

from __future__ import annotations

from .graph import Graph, bfs_order
from . import kernels


def plan(H: Graph, G: Graph) -> tuple[list[list[int]], list[int]]:
    """Pattern order and host candidate masks for :func:`kernels.embed_count`.

    Pattern vertices are visited in BFS order from a max-degree vertex so
    that every position after the first in a component is constrained by
    an earlier neighbour.  Host vertices of too small degree are masked
    out for each position.
    """
    order = bfs_order(H)
    pos = {v: i for i, v in enumerate(order)}
    back = [sorted(pos[u] for u in H.neighbors(v) if pos[u] < pos[v]) for v in order]
    host_deg = G.degrees()
    degmask = []
    for v in order:
        need = H.degree(v)
        mask = 0
        for u in range(G.n):
            if host_deg[u] >= need:
                mask |= 1 << u
        degmask.append(mask)
    return back, degmask


def embedding_count(
    H: Graph,
    G: Graph,
    *,
    stop_at_first: bool = False,
    first_images: int | None = None,
    backend: str | None = None,
) -> int:
    """Number of injective edge-preserving maps ``V(H) -> V(G)``.

    ``first_images`` restricts the image of the first pattern vertex in
    search order; splitting it across workers partitions the count.
    """
    if H.n == 0:
        return 1
    if H.n > G.n:
        return 0
    back, degmask = plan(H, G)
    if first_images is not None:
        degmask[0] &= first_images
    return kernels.embed_count(list(G.adj), back, degmask, stop_at_first, backend=backend)
