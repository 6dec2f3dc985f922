"""Pure-Python kernels; the reference twin of ``_ckernels.pyx``.

Both modules expose the same functions with the same arguments:

``embed_count(host, back, degmask, stop_first)``
    Count injective edge-preserving maps of a pattern into ``host``.
    ``host[v]`` is the neighbour bitset of host vertex ``v``.  Pattern
    positions are visited in order; ``back[i]`` lists the earlier
    positions adjacent to position ``i`` and ``degmask[i]`` is the set of
    host vertices allowed at position ``i``.  With ``stop_first`` the
    search returns as soon as the count is nonzero.

``path_embeddings(sizes, ell)``
    Number of embeddings of the path on ``ell`` vertices into the
    complete multipartite graph with the given class sizes.
"""

from __future__ import annotations


def embed_count(host, back, degmask, stop_first=False):
    m = len(back)
    if m == 0:
        return 1
    if m == 1:
        return degmask[0].bit_count()
    img = [0] * m
    used = [0] * m
    cand = [0] * m
    cand[0] = degmask[0]
    total = 0
    level = 0
    last = m - 1
    while level >= 0:
        c = cand[level]
        if not c:
            level -= 1
            continue
        low = c & -c
        cand[level] = c ^ low
        img[level] = low.bit_length() - 1
        nxt = level + 1
        u = used[level] | low
        c = degmask[nxt] & ~u
        for j in back[nxt]:
            c &= host[img[j]]
        if nxt == last:
            total += c.bit_count()
            if stop_first and total:
                break
        else:
            used[nxt] = u
            cand[nxt] = c
            level = nxt
    return total


def path_embeddings(sizes, ell):
    r = len(sizes)
    if ell <= 0:
        return 1
    taken = [0] * r

    def extend(pos, last):
        if pos == ell:
            return 1
        total = 0
        for c in range(r):
            free = sizes[c] - taken[c]
            if c != last and free > 0:
                taken[c] += 1
                total += free * extend(pos + 1, c)
                taken[c] -= 1
        return total

    return extend(0, -1)
