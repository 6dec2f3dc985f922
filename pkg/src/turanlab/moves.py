"""Destroyed and created P6 embeddings when a vertex changes class.

Setting: a complete multipartite graph with classes ``V1, V2, V3, ...``
where ``|V1| = a + 1``, ``|V2| = b`` and the remaining classes have sizes
``rest``.  A vertex ``v`` of ``V1`` moves to ``V2``.  An embedding of the
path ``v1 v2 v3 v4 v5 v6`` is destroyed when it uses an edge between ``v``
and ``V2``.  ``phi1``, ``phi2`` and ``phi3`` count destroyed embeddings
with ``v`` at path position 1, 2 and 3 (positions 4-6 mirror them), so

    phi = 2 (phi1 + phi2 + phi3),   psi = phi with a and b exchanged,

and ``phi - psi`` equals the change in the number of path embeddings,
``P6(K(a+1, b, rest)) - P6(K(a, b+1, rest))``.

Every count is split into case groups named by the classes of the path
vertices that decide the case (``A`` = V1, ``B`` = V2, ``R``/``S``/``T``
= distinct classes among the rest):

* ``phi1`` on (v3, v4 [, v5]):  AB, AR, RA, RB, RS, RST
* ``phi2`` on (v1, v3, v4 [, v5]) and ``phi3`` on (v2, v4, v5 [, v6]):
  BBA, BBR, BRA, BRB, RS (BRS or RBS), RST (same with a third rest
  class next), RBA, RBR

Two transcriptions are provided.  ``verbatim`` reproduces the published
sums term by term.  ``corrected`` replaces the RS and RST groups, where
the published sums treat unordered pairs and triples of rest classes as
if the summand were symmetric, and where the phi3 RBS case is taken to
equal the BRS case; both only hold when the relevant class sizes agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from typing import Iterator, Sequence

from .multipartite import path_embeddings_multipartite

GROUPS = {
    1: ("AB", "AR", "RA", "RB", "RS", "RST"),
    2: ("BBA", "BBR", "BRA", "BRB", "RS", "RST", "RBA", "RBR"),
    3: ("BBA", "BBR", "BRA", "BRB", "RS", "RST", "RBA", "RBR"),
}
VARIANTS = ("verbatim", "corrected")


def _check(a: int, b: int, rest: Sequence[int], n: int | None) -> int:
    if a < 1 or b < 1:
        raise ValueError("a and b must be at least 1")
    if any(t < 1 for t in rest):
        raise ValueError("rest classes must be nonempty")
    total = a + 1 + b + sum(rest)
    if n is not None and n != total:
        raise ValueError(f"inconsistent n: expected a+1+b+sum(rest) = {total}, got {n}")
    return total


def _pairs(r: int) -> Iterator[tuple[int, int]]:
    return combinations(range(r), 2)


def _triples(r: int) -> Iterator[tuple[int, int, int]]:
    return combinations(range(r), 3)


def phi1_groups(a: int, b: int, rest: Sequence[int], n: int | None = None, variant: str = "verbatim") -> dict[str, int]:
    n = _check(a, b, rest, n)
    N = list(rest)
    I = range(len(N))

    def g(i):
        return N[i] * (n - 4 - N[i])

    def others(i):
        return sum(g(j) for j in I if j != i)

    out = {
        "AB": b * a * (b - 1) * ((a - 1) * (n - 3 - a) + sum(g(i) for i in I)),
        "AR": sum(b * a * N[i] * ((a - 1) * (n - 3 - a) + (b - 1) * (n - 3 - b) + others(i)) for i in I),
        "RA": sum(b * N[i] * a * ((b - 1) * (n - 3 - b) + (N[i] - 1) * (n - 3 - N[i]) + others(i)) for i in I),
        "RB": sum(b * N[i] * (b - 1) * (a * (n - 4 - a) + (N[i] - 1) * (n - 3 - N[i]) + others(i)) for i in I),
    }
    if variant == "verbatim":
        out["RS"] = 2 * sum(
            b * N[i] * N[j] * (a * (n - 4 - a) + (b - 1) * (n - 3 - b) + (N[i] - 1) * (n - 3 - N[i]))
            for i, j in _pairs(len(N))
        )
        out["RST"] = 6 * sum(b * N[i] * N[j] * N[h] * (n - 4 - N[h]) for i, j, h in _triples(len(N)))
    elif variant == "corrected":
        out["RS"] = sum(
            b * N[i] * N[j] * (a * (n - 4 - a) + (b - 1) * (n - 3 - b) + (N[i] - 1) * (n - 3 - N[i]))
            for i, j in permutations(I, 2)
        )
        out["RST"] = sum(b * N[i] * N[j] * N[h] * (n - 4 - N[h]) for i, j, h in permutations(I, 3))
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return out


def phi2_groups(a: int, b: int, rest: Sequence[int], n: int | None = None, variant: str = "verbatim") -> dict[str, int]:
    n = _check(a, b, rest, n)
    N = list(rest)
    I = range(len(N))

    def g(i):
        return N[i] * (n - 4 - N[i])

    def others(i):
        return sum(g(j) for j in I if j != i)

    out = {
        "BBA": b * (b - 1) * a * ((b - 2) * (n - 2 - b) + sum(g(i) for i in I)),
        "BBR": sum(b * (b - 1) * N[i] * (a * (n - 4 - a) + (b - 2) * (n - 2 - b) + others(i)) for i in I),
        "BRA": sum(b * N[i] * a * ((b - 1) * (n - 3 - b) + (N[i] - 1) * (n - 3 - N[i]) + others(i)) for i in I),
        "BRB": sum(b * N[i] * (b - 1) * (a * (n - 4 - a) + (N[i] - 1) * (n - 3 - N[i]) + others(i)) for i in I),
        "RBA": sum(N[i] * b * a * ((b - 1) * (n - 3 - b) + (N[i] - 1) * (n - 3 - N[i]) + others(i)) for i in I),
        "RBR": sum(N[i] * b * (N[i] - 1) * (a * (n - 4 - a) + (b - 1) * (n - 3 - b) + others(i)) for i in I),
    }
    if variant == "verbatim":
        out["RS"] = 2 * 2 * sum(
            b * N[i] * N[j] * (a * (n - 4 - a) + (b - 1) * (n - 3 - b) + (N[i] - 1) * (n - 3 - N[i]))
            for i, j in _pairs(len(N))
        )
        out["RST"] = 2 * 6 * sum(b * N[i] * N[j] * N[h] * (n - 4 - N[h]) for i, j, h in _triples(len(N)))
    elif variant == "corrected":
        out["RS"] = 2 * sum(
            b * N[i] * N[j] * (a * (n - 4 - a) + (b - 1) * (n - 3 - b) + (N[i] - 1) * (n - 3 - N[i]))
            for i, j in permutations(I, 2)
        )
        out["RST"] = 2 * sum(b * N[i] * N[j] * N[h] * (n - 4 - N[h]) for i, j, h in permutations(I, 3))
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return {key: out[key] for key in GROUPS[2]}


def phi3_groups(a: int, b: int, rest: Sequence[int], n: int | None = None, variant: str = "verbatim") -> dict[str, int]:
    n = _check(a, b, rest, n)
    N = list(rest)
    I = range(len(N))

    def others(i, factor):
        return sum(N[j] * factor for j in I if j != i)

    out = {
        "BBA": b * (b - 1) * a * ((b - 2) * (n - 2 - b) + sum(N[i] * (n - 3 - b) for i in I)),
        "BBR": sum(
            b * (b - 1) * N[i] * (a * (n - 3 - b) + (b - 2) * (n - 2 - b) + others(i, n - 3 - b)) for i in I
        ),
        "BRA": sum(
            b * N[i] * a * ((b - 1) * (n - 3 - b) + (N[i] - 1) * (n - 4 - b) + others(i, n - 4 - b)) for i in I
        ),
        "BRB": sum(
            b * N[i] * (b - 1) * (a * (n - 3 - b) + (N[i] - 1) * (n - 3 - b) + others(i, n - 3 - b)) for i in I
        ),
        "RBA": sum(
            N[i] * b * a * ((b - 1) * (n - 4 - N[i]) + (N[i] - 1) * (n - 3 - N[i]) + others(i, n - 4 - N[i]))
            for i in I
        ),
        "RBR": sum(
            N[i] * b * (N[i] - 1) * (a * (n - 3 - N[i]) + (b - 1) * (n - 3 - N[i]) + others(i, n - 3 - N[i]))
            for i in I
        ),
    }
    if variant == "verbatim":
        out["RS"] = 2 * 2 * sum(
            b * N[i] * N[j] * (a * (n - 4 - b) + (b - 1) * (n - 3 - b) + (N[i] - 1) * (n - 4 - b))
            for i, j in _pairs(len(N))
        )
        out["RST"] = 2 * 6 * sum(b * N[i] * N[j] * N[h] * (n - 4 - b) for i, j, h in _triples(len(N)))
    elif variant == "corrected":
        # BRS: v2 in V2, v4 in R, v5 in S;  RBS: v2 in R, v4 in V2, v5 in S
        out["RS"] = sum(
            b * N[i] * N[j] * (a * (n - 4 - b) + (b - 1) * (n - 3 - b) + (N[i] - 1) * (n - 4 - b))
            + N[i] * b * N[j] * (a * (n - 4 - N[i]) + (b - 1) * (n - 4 - N[i]) + (N[i] - 1) * (n - 3 - N[i]))
            for i, j in permutations(I, 2)
        )
        out["RST"] = sum(
            b * N[i] * N[j] * N[h] * (n - 4 - b) + N[i] * b * N[j] * N[h] * (n - 4 - N[i])
            for i, j, h in permutations(I, 3)
        )
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return {key: out[key] for key in GROUPS[3]}


_GROUP_FUNCS = {1: phi1_groups, 2: phi2_groups, 3: phi3_groups}


def phi_groups(position: int, a: int, b: int, rest: Sequence[int], variant: str = "verbatim") -> dict[str, int]:
    return _GROUP_FUNCS[position](a, b, rest, None, variant)


def phi1(a, b, rest, n=None, variant="verbatim") -> int:
    return sum(phi1_groups(a, b, rest, n, variant).values())


def phi2(a, b, rest, n=None, variant="verbatim") -> int:
    return sum(phi2_groups(a, b, rest, n, variant).values())


def phi3(a, b, rest, n=None, variant="verbatim") -> int:
    return sum(phi3_groups(a, b, rest, n, variant).values())


# -- independent oracle -------------------------------------------------


def _classify(position: int, seq: Sequence[int]) -> str | None:
    """Case group of a class sequence (0 = V1, 1 = V2, >= 2 rest classes)."""
    A, B = 0, 1
    if position == 1:
        x, y, z = seq[2], seq[3], seq[4]
        if x == A:
            return "AB" if y == B else "AR"
        if y == A:
            return "RA"
        if y == B:
            return "RB"
        return "RS" if z in (A, B, x) else "RST"
    # positions 2 and 3 share the shape: (left, right, next, after)
    if position == 2:
        left, right, nxt, after = seq[0], seq[2], seq[3], seq[4]
    else:
        left, right, nxt, after = seq[1], seq[3], seq[4], seq[5]
    if left == B and right == B:
        return "BBA" if nxt == A else "BBR"
    if left == B:
        if nxt == A:
            return "BRA"
        if nxt == B:
            return "BRB"
        r = right
    elif right == B:
        if nxt == A:
            return "RBA"
        if nxt == left:
            return "RBR"
        r = left
    else:
        return None
    return "RS" if after in (A, B, r) else "RST"


def destroyed_by_group(position: int, a: int, b: int, rest: Sequence[int]) -> dict[str, int]:
    """Destroyed P6 embeddings with ``v`` at ``position``, counted per case group by enumeration.

    Enumerates class sequences of the path with ``v`` fixed at the given
    position; the weight of a sequence is the number of ways to choose
    distinct vertices in the prescribed classes.
    """
    _check(a, b, rest, None)
    sizes = [a, b] + list(rest)  # V1 without v
    r = len(sizes)
    p = position - 1
    out = dict.fromkeys(GROUPS[position], 0)
    taken = [0] * r
    seq = [0] * 6

    def extend(i: int, last: int, weight: int) -> None:
        if i == 6:
            if not ((p > 0 and seq[p - 1] == 1) or (p < 5 and seq[p + 1] == 1)):
                return
            key = _classify(position, seq)
            assert key is not None, seq
            out[key] += weight
            return
        if i == p:
            if last == 0:
                return
            seq[i] = 0
            extend(i + 1, 0, weight)
            return
        for c in range(r):
            free = sizes[c] - taken[c]
            if c != last and free > 0:
                taken[c] += 1
                seq[i] = c
                extend(i + 1, c, weight * free)
                taken[c] -= 1

    extend(0, -1, 1)
    return out


def destroyed_by_vertices(position: int, a: int, b: int, rest: Sequence[int]) -> int:
    """Vertex-level brute force of the same quantity, for small sizes only."""
    sizes = [a + 1, b] + list(rest)
    cls = [c for c, t in enumerate(sizes) for _ in range(t)]
    v = 0
    others = [u for u in range(1, len(cls))]
    total = 0
    for rest_img in permutations(others, 5):
        img = list(rest_img[: position - 1]) + [v] + list(rest_img[position - 1:])
        if any(cls[img[i]] == cls[img[i + 1]] for i in range(5)):
            continue
        if any(
            (img[i] == v and cls[img[i + 1]] == 1) or (img[i + 1] == v and cls[img[i]] == 1) for i in range(5)
        ):
            total += 1
    return total


# -- move delta ---------------------------------------------------------


@dataclass
class MoveDelta:
    a: int
    b: int
    rest: tuple[int, ...]
    n: int
    variant: str
    phi1: int
    phi2: int
    phi3: int
    phi: int
    psi: int
    oracle_diff: int
    mismatched_groups: list[str] = field(default_factory=list)

    @property
    def delta(self) -> int:
        return self.phi - self.psi

    @property
    def oracle_match(self) -> bool:
        return self.delta == self.oracle_diff

    @property
    def valid_size(self) -> bool:
        # the published sums are only claimed for large n; below 6 no P6 fits
        return self.n >= 6


def move_delta(
    a: int, b: int, rest: Sequence[int], *, variant: str = "verbatim", localize: str = "oracle"
) -> MoveDelta:
    """Formula value of phi - psi next to the exact change in P6 embeddings.

    ``localize`` picks how mismatching case groups are found: ``oracle``
    enumerates each group, ``corrected`` compares against the corrected
    transcription (fast, itself checked against the oracle in the tests),
    ``none`` skips localisation.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    rest = tuple(rest)
    n = _check(a, b, rest, None)
    p1, p2, p3 = phi1(a, b, rest, n, variant), phi2(a, b, rest, n, variant), phi3(a, b, rest, n, variant)
    phi = 2 * (p1 + p2 + p3)
    psi = 2 * (phi1(b, a, rest, n, variant) + phi2(b, a, rest, n, variant) + phi3(b, a, rest, n, variant))
    diff = path_embeddings_multipartite((a + 1, b) + rest, 6) - path_embeddings_multipartite((a, b + 1) + rest, 6)
    md = MoveDelta(a, b, rest, n, variant, p1, p2, p3, phi, psi, diff)
    if not md.oracle_match and localize != "none":
        md.mismatched_groups = localize_mismatch(a, b, rest, variant, method=localize)
    return md


def localize_mismatch(a: int, b: int, rest: Sequence[int], variant: str = "verbatim", method: str = "oracle") -> list[str]:
    """Case groups whose formula value differs from the reference, as ``side:phiK[GROUP]``.

    ``side`` is ``phi`` for the (a, b) evaluation and ``psi`` for (b, a).
    """
    found = []
    for side, (x, y) in (("phi", (a, b)), ("psi", (b, a))):
        for pos in (1, 2, 3):
            got = phi_groups(pos, x, y, rest, variant)
            if method == "oracle":
                ref = destroyed_by_group(pos, x, y, rest)
            elif method == "corrected":
                ref = phi_groups(pos, x, y, rest, "corrected")
            else:
                raise ValueError(f"unknown localisation method {method!r}")
            found.extend(f"{side}:phi{pos}[{g}]" for g in GROUPS[pos] if got[g] != ref[g])
    return found


def sweep_tuples(parts_range: Sequence[int], max_size: int, max_n: int) -> Iterator[tuple[int, int, tuple[int, ...]]]:
    """All (a, b, rest) with a > b, every entry in 1..max_size and a + 1 + b + sum(rest) <= max_n.

    ``parts_range`` lists the numbers of classes (k - 1) to cover; rest
    tuples are ordered, since the verbatim sums depend on their order.
    """
    for r in parts_range:
        for a in range(2, max_size + 1):
            for b in range(1, a):
                for rest in product(range(1, max_size + 1), repeat=r - 2):
                    if a + 1 + b + sum(rest) <= max_n:
                        yield a, b, rest


def move_delta_sweep(
    parts_range: Sequence[int],
    max_size: int,
    max_n: int,
    *,
    variant: str = "verbatim",
    oracle_localize_limit: int = 25,
) -> list[MoveDelta]:
    """Run :func:`move_delta` over :func:`sweep_tuples`.

    Every mismatch is localised; the first ``oracle_localize_limit``
    against the enumeration oracle, the rest against the corrected sums.
    """
    out = []
    oracle_left = oracle_localize_limit
    for a, b, rest in sweep_tuples(parts_range, max_size, max_n):
        md = move_delta(a, b, rest, variant=variant, localize="none")
        if not md.oracle_match:
            method = "oracle" if oracle_left > 0 else "corrected"
            oracle_left -= method == "oracle"
            md.mismatched_groups = localize_mismatch(a, b, rest, variant, method=method)
        out.append(md)
    return out
