"""Exact copy, embedding, walk and matching counts on small graphs."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .graph import Graph, chromatic_number
from .search import embedding_count
from .turan import turan_graph


def _embedding_chunk(args: tuple) -> int:
    H, G, mask, backend = args
    return embedding_count(H, G, first_images=mask, backend=backend)


def count_embeddings(H: Graph, G: Graph, *, workers: int = 1, backend: str | None = None) -> int:
    """Injective edge-preserving maps ``V(H) -> V(G)``.

    With ``workers > 1`` the images of the first pattern vertex are dealt
    round-robin to worker processes and the partial counts added.
    """
    if workers <= 1 or G.n < 2:
        return embedding_count(H, G, backend=backend)
    masks = [0] * workers
    for v in range(G.n):
        masks[v % workers] |= 1 << v
    jobs = [(H, G, m, backend) for m in masks if m]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_embedding_chunk, jobs))


def automorphism_count(H: Graph) -> int:
    return embedding_count(H, H)


def count_copies(H: Graph, G: Graph, *, workers: int = 1, backend: str | None = None) -> int:
    """Number of (not necessarily induced) subgraphs of ``G`` isomorphic to ``H``."""
    emb = count_embeddings(H, G, workers=workers, backend=backend)
    aut = automorphism_count(H)
    copies, rem = divmod(emb, aut)
    assert rem == 0, "embedding count not divisible by |Aut(H)|"
    return copies


@dataclass(frozen=True)
class HDegreeProfile:
    degrees: tuple[int, ...]
    minimum: int


def h_degree_profile(G: Graph, H: Graph) -> HDegreeProfile:
    """Copies of ``H`` through each vertex, as ``N(H, G) - N(H, G - v)``."""
    total = count_copies(H, G)
    degs = tuple(total - count_copies(H, G.remove_vertex(v)) for v in range(G.n))
    return HDegreeProfile(degs, min(degs) if degs else 0)


def _turan_like(s: int, r: int) -> Graph:
    # T_r(s) with fewer than r vertices degenerates to K_s
    return turan_graph(s, min(r, s))


def prune_by_h_degree(G: Graph, H: Graph, k: int) -> Graph:
    """Delete low H-degree vertices until every vertex meets the Turán threshold.

    At each step the current graph on ``s`` vertices is compared with
    ``T_{k-1}(s)``; among vertices with ``d(v, H) < delta(T_{k-1}(s), H)``
    the one with the smallest H-degree is deleted, ties going to the
    lowest index.  Returns the terminal graph (possibly without vertices).
    """
    if chromatic_number(H) >= k:
        raise ValueError("pruning needs chi(H) < k")
    current = G
    while current.n:
        threshold = h_degree_profile(_turan_like(current.n, k - 1), H).minimum
        degs = h_degree_profile(current, H).degrees
        low = [(d, v) for v, d in enumerate(degs) if d < threshold]
        if not low:
            break
        current = current.remove_vertex(min(low)[1])
    return current


def walk_count(G: Graph, k: int) -> int:
    """Walks with ``k`` edges (``k + 1`` vertices, repetition allowed)."""
    if k < 0:
        raise ValueError("walk length must be nonnegative")
    x = [1] * G.n
    nbrs = [G.neighbors(v) for v in range(G.n)]
    for _ in range(k):
        x = [sum(x[u] for u in nbrs[v]) for v in range(G.n)]
    return sum(x)


def spectral_radius(G: Graph, tol: float = 1e-9, max_iter: int = 10**6) -> float:
    """Largest adjacency eigenvalue by power iteration on ``A^2``.

    Each component is iterated separately from the all-ones vector; the
    Collatz-Wielandt ratios of ``A^2 x`` to ``x`` bracket ``mu^2`` and the
    loop stops once the bracket for ``mu`` is narrower than ``tol``.
    Squaring removes the period-2 oscillation on bipartite components.
    """
    if G.n == 0:
        return 0.0
    best = 0.0
    for comp in G.components():
        if len(comp) == 1:
            continue
        A = np.zeros((len(comp), len(comp)))
        for i, v in enumerate(comp):
            for j, u in enumerate(comp):
                if G.has_edge(v, u):
                    A[i, j] = 1.0
        M = A @ A
        x = np.ones(len(comp))
        lo, hi = 0.0, float("inf")
        for _ in range(max_iter):
            y = M @ x
            ratios = y / x
            lo, hi = ratios.min(), ratios.max()
            if math.sqrt(hi) - math.sqrt(lo) < tol:
                break
            x = y / y.max()
        best = max(best, 0.5 * (math.sqrt(lo) + math.sqrt(hi)))
    return best


def matching_count(G: Graph, k: int) -> int:
    """Number of matchings with exactly ``k`` edges."""
    adj = G.adj

    @lru_cache(maxsize=None)
    def count(mask: int, need: int) -> int:
        if need == 0:
            return 1
        if mask.bit_count() < 2 * need:
            return 0
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        total = count(rest, need)
        nb = adj[v] & rest
        while nb:
            b = nb & -nb
            total += count(rest ^ b, need - 1)
            nb ^= b
        return total

    return count((1 << G.n) - 1, k)


def matching_embeddings(G: Graph, k: int, plus: bool = False) -> int:
    """Embeddings of k disjoint labelled edges (plus an isolated vertex if ``plus``).

    Each k-matching of ``G`` is hit by ``k! * 2^k`` ordered, oriented
    labellings; the extra vertex then has ``n - 2k`` free images.
    """
    if k < 1:
        raise ValueError("matching size must be at least 1")
    total = matching_count(G, k) * math.factorial(k) * 2**k
    if plus:
        total *= max(G.n - 2 * k, 0)
    return total
