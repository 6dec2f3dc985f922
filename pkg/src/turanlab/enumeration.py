"""Isomorph-free generation of small graphs and exact generalized Turán numbers.

Graphs on ``n`` vertices are grown from graphs on ``n - 1`` vertices by
adding one vertex joined to a chosen neighbourhood.  A child ``C`` built
from parent ``P`` with new vertex ``v`` is kept only when ``v`` lies in the
automorphism orbit of the canonically chosen deletion vertex ``u*(C)``:
among vertices of maximum degree, those with the largest sorted
neighbour-degree sequence, and among those the one with the largest
canonical label.  Every class is then produced from exactly one parent
class, and isomorphic children of one parent are merged by canonical form.

Because F-freeness passes to induced subgraphs, the tree is pruned as
soon as a child contains F.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Sequence

from .canon import _orbit_of, canonical_form, labeling_and_generators
from .counting import automorphism_count
from .graph import Graph, GraphError, chromatic_number, empty_graph, is_subgraph
from .graph6 import graph6_decode, graph6_encode, read_graph6_file, write_graph6_file
from .search import embedding_count
from .turan import turan_graph

HARD_CAP = 10
DEFAULT_UNRESTRICTED_CAP = 9
CACHE_ENV = "TURANLAB_CACHE_DIR"


class EnumerationCapError(GraphError):
    """Requested order exceeds what exhaustive enumeration supports."""


def check_cap(n: int, restricted: bool, allow_large: bool = False) -> None:
    if n < 0:
        raise EnumerationCapError("n must be nonnegative")
    if n > HARD_CAP:
        raise EnumerationCapError(f"n={n} exceeds the hard cap of {HARD_CAP}")
    if not restricted and n > DEFAULT_UNRESTRICTED_CAP and not allow_large:
        raise EnumerationCapError(
            f"unrestricted enumeration beyond n={DEFAULT_UNRESTRICTED_CAP} needs allow_large"
        )


def _deletion_candidates(C: Graph) -> int:
    """Vertices of ``C`` tied for the invariant part of the u* rule."""
    deg = C.degrees()
    top = max(deg)
    best = None
    mask = 0
    for x in range(C.n):
        if deg[x] != top:
            continue
        inv = sorted((deg[y] for y in C.neighbors(x)), reverse=True)
        if best is None or inv > best:
            best, mask = inv, 1 << x
        elif inv == best:
            mask |= 1 << x
    return mask


def _children(parent: Graph, F: Graph | None) -> list[bytes]:
    """Canonical graph6 of accepted, pairwise non-isomorphic children of ``parent``."""
    m = parent.n
    deg = parent.degrees()
    seen: set[bytes] = set()
    out = []
    for S in range(1 << m):
        size = S.bit_count()
        if any(size < deg[u] + (S >> u & 1) for u in range(m)):
            continue
        C = parent.add_vertex(S)
        cand = _deletion_candidates(C)
        if not cand >> m & 1:
            continue
        if F is not None and is_subgraph(F, C):
            continue
        lab, gens = labeling_and_generators(C)
        if cand != 1 << m:
            ustar = max((x for x in range(C.n) if cand >> x & 1), key=lambda x: lab[x])
            if not _orbit_of(ustar, gens) >> m & 1:
                continue
        code = graph6_encode(C.relabel(lab))
        if code not in seen:
            seen.add(code)
            out.append(code)
    return out


def _children_chunk(args: tuple) -> list[bytes]:
    codes, F = args
    return [c for code in codes for c in _children(graph6_decode(code), F)]


def _next_level(level: list[bytes], F: Graph | None, workers: int) -> list[bytes]:
    if workers > 1 and len(level) > 1:
        chunks = [level[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_children_chunk, [(c, F) for c in chunks if c]))
        codes = [c for part in parts for c in part]
    else:
        codes = _children_chunk((level, F))
    codes.sort()
    return codes


def _cache_root(cache_dir: str | Path | None) -> Path | None:
    if cache_dir is None:
        cache_dir = os.environ.get(CACHE_ENV)
    return Path(cache_dir) if cache_dir else None


def cache_filename(n: int, F: Graph | None) -> str:
    tag = "all" if F is None else canonical_form(F).decode("ascii")
    return f"{n}_{tag}.g6"


def _generate(n: int, F: Graph | None, workers: int, cache_dir) -> list[bytes]:
    root = _cache_root(cache_dir)
    start, level = 0, [graph6_encode(empty_graph(0))]
    if root is not None:
        for j in range(n, -1, -1):
            path = root / cache_filename(j, F)
            if path.is_file():
                level = [graph6_encode(G) for G in read_graph6_file(path)]
                start = j
                break
    for j in range(start + 1, n + 1):
        level = _next_level(level, F, workers)
        if root is not None:
            root.mkdir(parents=True, exist_ok=True)
            write_graph6_file(root / cache_filename(j, F), (graph6_decode(c) for c in level))
    return level


def enumerate_graphs(
    n: int, *, allow_large: bool = False, workers: int = 1, cache_dir: str | Path | None = None
) -> Iterator[Graph]:
    """One canonically labelled representative of every graph on ``n`` vertices."""
    check_cap(n, restricted=False, allow_large=allow_large)
    for code in _generate(n, None, workers, cache_dir):
        yield graph6_decode(code)


def enumerate_f_free(
    n: int, F: Graph, *, workers: int = 1, cache_dir: str | Path | None = None
) -> Iterator[Graph]:
    """One canonically labelled representative of every F-free graph on ``n`` vertices."""
    if F.num_edges == 0:
        raise GraphError("forbidden graph must have at least one edge")
    check_cap(n, restricted=True)
    for code in _generate(n, F, workers, cache_dir):
        yield graph6_decode(code)


@dataclass
class ExtremalReport:
    n: int
    H: str
    F: str
    ex_value: int
    extremal_graphs: list[str]
    turan_value: int
    turan_is_extremal: bool
    turan_is_unique: bool
    graphs_scanned: int
    wall_ms: float = 0.0

    @property
    def extremal_count(self) -> int:
        return len(self.extremal_graphs)


def _count_chunk(args: tuple) -> list[int]:
    H, codes = args
    return [embedding_count(H, graph6_decode(c)) for c in codes]


def generalized_turan(
    n: int,
    H: Graph,
    F: Graph,
    *,
    workers: int = 1,
    cache_dir: str | Path | None = None,
    H_label: str | None = None,
    F_label: str | None = None,
) -> ExtremalReport:
    """Exact ex(n, H, F) with all extremal graphs and the Turán comparison."""
    t0 = time.perf_counter()
    graphs = [graph6_encode(G) for G in enumerate_f_free(n, F, workers=workers, cache_dir=cache_dir)]
    aut = automorphism_count(H)
    if workers > 1 and len(graphs) > 1:
        chunks = [graphs[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_count_chunk, [(H, c) for c in chunks]))
        emb = [0] * len(graphs)
        for i, part in enumerate(parts):
            emb[i::workers] = part
    else:
        emb = _count_chunk((H, graphs))
    copies = [e // aut for e in emb]
    ex = max(copies)
    extremal = [graphs[i].decode("ascii") for i, c in enumerate(copies) if c == ex]
    r = chromatic_number(F) - 1
    T = turan_graph(n, min(r, n)) if n > 0 else empty_graph(0)
    turan_value = embedding_count(H, T) // aut
    tcode = canonical_form(T).decode("ascii")
    return ExtremalReport(
        n=n,
        H=H_label or graph6_encode(H).decode("ascii"),
        F=F_label or graph6_encode(F).decode("ascii"),
        ex_value=ex,
        extremal_graphs=extremal,
        turan_value=turan_value,
        turan_is_extremal=turan_value == ex,
        turan_is_unique=extremal == [tcode],
        graphs_scanned=len(graphs),
        wall_ms=(time.perf_counter() - t0) * 1000.0,
    )


@dataclass
class TuranGoodScan:
    reports: list[ExtremalReport] = field(default_factory=list)

    @property
    def unique_from(self) -> int | None:
        """Smallest scanned n from which the Turán graph is the unique extremal graph throughout."""
        first = None
        for rep in reversed(self.reports):
            if not rep.turan_is_unique:
                break
            first = rep.n
        return first

    @property
    def monotone(self) -> bool:
        vals = [r.ex_value for r in sorted(self.reports, key=lambda r: r.n)]
        return all(a <= b for a, b in zip(vals, vals[1:]))


def turan_good_scan(
    H: Graph,
    F: Graph,
    n_range: Sequence[int],
    *,
    workers: int = 1,
    cache_dir: str | Path | None = None,
    H_label: str | None = None,
    F_label: str | None = None,
) -> TuranGoodScan:
    ns = sorted(n_range)
    for n in ns:
        check_cap(n, restricted=True)
    return TuranGoodScan(
        [
            generalized_turan(n, H, F, workers=workers, cache_dir=cache_dir, H_label=H_label, F_label=F_label)
            for n in ns
        ]
    )
