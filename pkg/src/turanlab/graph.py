"""Small simple undirected graphs stored as bitset adjacency rows.

A :class:`Graph` holds at most :data:`MAX_VERTICES` vertices; row ``adj[v]``
is an integer whose bit ``u`` is set iff ``uv`` is an edge.  Graphs are
immutable and hashable, so they can be shared freely between workers.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    """Raised for malformed graph input (loops, duplicates, bad indices)."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour out of range")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in _bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    # -- basic queries -------------------------------------------------
    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    # -- derived graphs ------------------------------------------------
    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        new = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in _bits(self.adj[v]):
                row |= 1 << perm[u]
            new[perm[v]] = row
        return Graph(self.n, tuple(new))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced on ``vertices``, relabelled 0.. in the given order."""
        pos = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for u in _bits(self.adj[v]):
                if u in pos:
                    row |= 1 << pos[u]
            rows.append(row)
        return Graph(len(vertices), tuple(rows))

    def remove_vertex(self, v: int) -> "Graph":
        return self.induced([u for u in range(self.n) if u != v])

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise GraphError(f"no edge {u}{v}")
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def add_vertex(self, neighbourhood: int) -> "Graph":
        """Append vertex ``n`` adjacent to the vertices in bitmask ``neighbourhood``."""
        v = self.n
        rows = [row | (1 << v) if neighbourhood >> u & 1 else row for u, row in enumerate(self.adj)]
        rows.append(neighbourhood)
        return Graph(v + 1, tuple(rows))

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.n
        return Graph(self.n + other.n, self.adj + tuple(row << shift for row in other.adj))

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 0
            frontier = 1 << s
            while frontier:
                comp |= frontier
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
            seen |= comp
            comps.append(list(_bits(comp)))
        return comps

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def new_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices from an edge list.

    Loops, repeated edges (in either orientation) and endpoints outside
    ``0..n-1`` are rejected with :class:`GraphError`.
    """
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {u}{v} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if rows[u] >> v & 1:
            raise GraphError(f"duplicate edge {u}{v}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


# -- structural predicates ----------------------------------------------


def is_subgraph(F: Graph, G: Graph) -> bool:
    """True iff ``G`` contains ``F`` as a (not necessarily induced) subgraph."""
    from .search import embedding_count

    if F.n > G.n or F.num_edges > G.num_edges:
        return False
    return embedding_count(F, G, stop_at_first=True) > 0


def is_bipartite(G: Graph) -> bool:
    color = [-1] * G.n
    for s in range(G.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in _bits(G.adj[v]):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def _colorable(G: Graph, k: int) -> bool:
    order = sorted(range(G.n), key=lambda v: -G.degree(v))
    classes = [0] * k

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        # colours beyond used + 1 are symmetric copies of colour `used`
        for c in range(min(used + 1, k)):
            if not classes[c] & G.adj[v]:
                classes[c] |= 1 << v
                if place(i + 1, max(used, c + 1)):
                    return True
                classes[c] &= ~(1 << v)
        return False

    return place(0, 0)


def chromatic_number(G: Graph) -> int:
    """Exact chromatic number; 0 for the graph with no vertices."""
    if G.n == 0:
        return 0
    if G.num_edges == 0:
        return 1
    if is_bipartite(G):
        return 2
    k = max(3, clique_number(G))
    while not _colorable(G, k):
        k += 1
    return k


def clique_number(G: Graph) -> int:
    """Maximum clique size by bitset branch and bound."""
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            expand(size + 1, cand & G.adj[v])
            cand ^= low

    expand(0, (1 << G.n) - 1)
    return best


def matching_number(G: Graph) -> int:
    """Size of a maximum matching (Edmonds' blossom algorithm)."""
    n = G.n
    nbrs = [G.neighbors(v) for v in range(n)]
    match = [-1] * n

    def augment_from(root: int) -> bool:
        base = list(range(n))
        parent = [-1] * n
        used = [False] * n
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] < 0:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while queue:
            v = queue.popleft()
            for to in nbrs[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] >= 0 and parent[match[to]] >= 0):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] < 0:
                    parent[to] = v
                    if match[to] < 0:
                        while to >= 0:
                            pv = parent[to]
                            nxt = match[pv]
                            match[to], match[pv] = pv, to
                            to = nxt
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] < 0:
            # greedy start keeps the searches short
            for u in nbrs[v]:
                if match[u] < 0:
                    match[u], match[v] = v, u
                    break
    for v in range(n):
        if match[v] < 0:
            augment_from(v)
    return sum(1 for m in match if m >= 0) // 2


def color_critical_edges(F: Graph) -> list[tuple[int, int]]:
    """Edges whose deletion lowers the chromatic number of ``F``."""
    chi = chromatic_number(F)
    return [e for e in F.edges() if chromatic_number(F.remove_edge(*e)) < chi]


def bfs_order(G: Graph) -> list[int]:
    """Vertex order where each component starts at its max-degree vertex
    and every later vertex of the component has an earlier neighbour."""
    order: list[int] = []
    placed = 0
    while len(order) < G.n:
        start = max((v for v in range(G.n) if not placed >> v & 1), key=lambda v: (G.degree(v), -v))
        placed |= 1 << start
        queue = deque([start])
        while queue:
            v = queue.popleft()
            order.append(v)
            for u in sorted(_bits(G.adj[v] & ~placed), key=lambda u: (-G.degree(u), u)):
                placed |= 1 << u
                queue.append(u)
    return order
