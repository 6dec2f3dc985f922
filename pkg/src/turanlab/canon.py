"""Canonical labelling by partition refinement and individualisation.

The search tree is the usual one: refine the ordered partition to an
equitable one, individualise each vertex of the first non-singleton cell
in turn, and recurse.  Leaves are discrete partitions; the canonical
labelling is the leaf whose relabelled adjacency rows are largest.
Subtrees are skipped when an automorphism already found (and fixing the
current prefix pointwise) maps the candidate to a vertex already tried.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph, _bits
from .graph6 import graph6_encode


def _refine(adj: Sequence[int], cells: list[int]) -> list[int]:
    while True:
        for splitter in cells:
            out = []
            split = False
            for cell in cells:
                if cell & (cell - 1) == 0:
                    out.append(cell)
                    continue
                groups: dict[int, int] = {}
                for v in _bits(cell):
                    k = (adj[v] & splitter).bit_count()
                    groups[k] = groups.get(k, 0) | 1 << v
                if len(groups) > 1:
                    split = True
                    out.extend(groups[k] for k in sorted(groups))
                else:
                    out.append(cell)
            if split:
                cells = out
                break
        else:
            return cells


def _orbit_of(v: int, gens: list[tuple[int, ...]]) -> int:
    orbit = 1 << v
    frontier = [v]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = g[x]
            if not orbit >> y & 1:
                orbit |= 1 << y
                frontier.append(y)
    return orbit


class _Search:
    def __init__(self, G: Graph):
        self.G = G
        self.adj = G.adj
        self.first: tuple[tuple[int, ...], tuple[int, ...]] | None = None
        self.best: tuple[tuple[int, ...], tuple[int, ...]] | None = None
        self.gens: list[tuple[int, ...]] = []

    def certificate(self, lab: list[int]) -> tuple[int, ...]:
        rows = [0] * self.G.n
        for v in range(self.G.n):
            row = 0
            for u in _bits(self.adj[v]):
                row |= 1 << lab[u]
            rows[lab[v]] = row
        return tuple(rows)

    def leaf(self, cells: list[int]) -> None:
        lab = [0] * self.G.n
        for i, cell in enumerate(cells):
            lab[cell.bit_length() - 1] = i
        cert = self.certificate(lab)
        labt = tuple(lab)
        if self.first is None:
            self.first = self.best = (cert, labt)
            return
        for ref_cert, ref_lab in (self.first, self.best):
            if cert == ref_cert:
                inv = [0] * self.G.n
                for v, l in enumerate(ref_lab):
                    inv[l] = v
                gamma = tuple(inv[lab[v]] for v in range(self.G.n))
                if any(gamma[v] != v for v in range(self.G.n)) and gamma not in self.gens:
                    self.gens.append(gamma)
                return
        if cert > self.best[0]:
            self.best = (cert, labt)

    def run(self, cells: list[int], prefix: list[int]) -> None:
        cells = _refine(self.adj, cells)
        idx = next((i for i, c in enumerate(cells) if c & (c - 1)), None)
        if idx is None:
            self.leaf(cells)
            return
        target = cells[idx]
        tried = 0
        for v in _bits(target):
            if tried >> v & 1:
                continue
            stab = [g for g in self.gens if all(g[p] == p for p in prefix)]
            if stab and _orbit_of(v, stab) & tried:
                continue
            tried |= 1 << v
            child = cells[:idx] + [1 << v, target & ~(1 << v)] + cells[idx + 1:]
            self.run(child, prefix + [v])


def _initial_cells(G: Graph, colors: Sequence[int] | None) -> list[int]:
    if G.n == 0:
        return []
    if colors is None:
        return [(1 << G.n) - 1]
    groups: dict[int, int] = {}
    for v, c in enumerate(colors):
        groups[c] = groups.get(c, 0) | 1 << v
    return [groups[c] for c in sorted(groups)]


def labeling_and_generators(
    G: Graph, colors: Sequence[int] | None = None
) -> tuple[tuple[int, ...], list[tuple[int, ...]]]:
    """Canonical labelling together with generators of the automorphism group."""
    s = _Search(G)
    s.run(_initial_cells(G, colors), [])
    return (s.best[1] if s.best else ()), s.gens


def canonical_labeling(G: Graph, colors: Sequence[int] | None = None) -> tuple[int, ...]:
    """Canonical label of each vertex: ``result[v]`` is the new index of ``v``.

    ``colors`` optionally assigns an integer colour per vertex; labellings
    then only map vertices to vertices of equal colour, and colour classes
    occupy consecutive labels in increasing colour order.
    """
    return labeling_and_generators(G, colors)[0]


def automorphism_generators(G: Graph) -> list[tuple[int, ...]]:
    """Automorphisms discovered while canonically labelling ``G``."""
    return labeling_and_generators(G)[1]


def orbit(G: Graph, v: int, gens: list[tuple[int, ...]] | None = None) -> int:
    """Bitmask of the automorphism orbit of ``v``."""
    if gens is None:
        gens = automorphism_generators(G)
    return _orbit_of(v, gens)


def canonical_form(G: Graph, colors: Sequence[int] | None = None) -> bytes:
    """graph6 of the canonically relabelled graph (colour class sizes prefixed when coloured)."""
    lab = canonical_labeling(G, colors)
    body = graph6_encode(G.relabel(lab))
    if colors is None:
        return body
    sizes = sorted((c, list(colors).count(c)) for c in set(colors))
    return ",".join(str(k) for _, k in sizes).encode() + b":" + body


def same_orbit(G: Graph, u: int, v: int) -> bool:
    """True iff some automorphism of ``G`` maps ``u`` to ``v``."""
    if u == v:
        return True
    cu = [1 if x == u else 0 for x in range(G.n)]
    cv = [1 if x == v else 0 for x in range(G.n)]
    return canonical_form(G, cu) == canonical_form(G, cv)
