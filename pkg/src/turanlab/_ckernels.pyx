# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled twin of ``_pykernels``; see that module for the contracts.

Host graphs are limited to 64 vertices (one machine word per row) and
``path_embeddings`` must only be called when the result fits in 63 bits;
``turanlab.kernels`` enforces both before dispatching here.
"""

from libc.stdint cimport uint64_t, int64_t


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil


def embed_count(host, back, degmask, bint stop_first=False):
    cdef int m = len(back)
    cdef uint64_t H[64]
    cdef uint64_t D[64]
    cdef uint64_t cand[64]
    cdef uint64_t used[64]
    cdef int img[64]
    cdef int nb[64]
    cdef int B[64][64]
    cdef int i, j, level, nxt, last
    cdef uint64_t c, low, u
    cdef unsigned long long total = 0

    if m == 0:
        return 1
    for i in range(len(host)):
        H[i] = <uint64_t>host[i]
    for i in range(m):
        D[i] = <uint64_t>degmask[i]
        nb[i] = len(back[i])
        for j in range(nb[i]):
            B[i][j] = back[i][j]
    if m == 1:
        return __builtin_popcountll(D[0])

    last = m - 1
    with nogil:
        used[0] = 0
        cand[0] = D[0]
        level = 0
        while level >= 0:
            c = cand[level]
            if c == 0:
                level -= 1
                continue
            low = c & (~c + 1)
            cand[level] = c ^ low
            img[level] = __builtin_ctzll(low)
            nxt = level + 1
            u = used[level] | low
            c = D[nxt] & ~u
            for j in range(nb[nxt]):
                c = c & H[img[B[nxt][j]]]
            if nxt == last:
                total += __builtin_popcountll(c)
                if stop_first and total:
                    break
            else:
                used[nxt] = u
                cand[nxt] = c
                level = nxt
    return total


cdef int64_t _extend(int pos, int last, int ell, int r, int64_t* sizes, int64_t* taken) nogil:
    cdef int64_t total = 0
    cdef int64_t free
    cdef int c
    if pos == ell:
        return 1
    for c in range(r):
        free = sizes[c] - taken[c]
        if c != last and free > 0:
            taken[c] += 1
            total += free * _extend(pos + 1, c, ell, r, sizes, taken)
            taken[c] -= 1
    return total


def path_embeddings(sizes, int ell):
    cdef int r = len(sizes)
    cdef int64_t S[64]
    cdef int64_t T[64]
    cdef int i
    cdef int64_t result
    if ell <= 0:
        return 1
    for i in range(r):
        S[i] = sizes[i]
        T[i] = 0
    with nogil:
        result = _extend(0, -1, ell, r, S, T)
    return result
