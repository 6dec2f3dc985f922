"""Named graphs used on the command line and in experiments.

Accepted names (case sensitive):

    P<l>          path on l vertices
    C<l>          cycle on l vertices (l >= 3)
    K<l>          complete graph
    K<a>,<b>,...  complete multipartite graph with the given class sizes
    B<k>          book: k triangles sharing one edge
    E<n>          edgeless graph
    T<r>,<n>      Turan graph with r classes on n vertices
    Petersen

Anything else is decoded as graph6.
"""

from __future__ import annotations

import re

from .graph import Graph, GraphError, empty_graph, new_graph
from .graph6 import graph6_decode
from .turan import complete_multipartite, turan_graph


def path(ell: int) -> Graph:
    if ell < 1:
        raise GraphError("path needs at least one vertex")
    return new_graph(ell, [(i, i + 1) for i in range(ell - 1)])


def cycle(ell: int) -> Graph:
    if ell < 3:
        raise GraphError("cycle needs at least three vertices")
    return new_graph(ell, [(i, (i + 1) % ell) for i in range(ell)])


def complete(ell: int) -> Graph:
    return new_graph(ell, [(i, j) for i in range(ell) for j in range(i + 1, ell)])


def book(k: int) -> Graph:
    """k triangles on the common edge 01."""
    if k < 1:
        raise GraphError("book needs at least one page")
    edges = [(0, 1)] + [(s, 2 + i) for i in range(k) for s in (0, 1)]
    return new_graph(k + 2, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return new_graph(10, outer + spokes + inner)


_SIMPLE = {"P": path, "C": cycle, "E": empty_graph, "B": book}


def parse_graph(spec: str) -> Graph:
    """Turn a preset name or a graph6 string into a :class:`Graph`."""
    spec = spec.strip()
    if spec == "Petersen":
        return petersen()
    m = re.fullmatch(r"([PCEB])(\d+)", spec)
    if m:
        return _SIMPLE[m.group(1)](int(m.group(2)))
    m = re.fullmatch(r"K(\d+(?:,\d+)*)", spec)
    if m:
        sizes = [int(x) for x in m.group(1).split(",")]
        return complete(sizes[0]) if len(sizes) == 1 else complete_multipartite(sizes)
    m = re.fullmatch(r"T(\d+),(\d+)", spec)
    if m:
        return turan_graph(int(m.group(2)), int(m.group(1)))
    return graph6_decode(spec)
