# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contract as ``hadamard_kit._pykernels``."""
import time

import numpy as np

cimport numpy as cnp
from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport free, malloc, realloc

cnp.import_array()

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil

MODE_FIRST = 0
MODE_MAX = 1

cdef enum:
    CHECK_EVERY = 1024


def gram(const uint64_t[:, ::1] words, Py_ssize_t n):
    cdef Py_ssize_t r = words.shape[0], nw = words.shape[1]
    cdef Py_ssize_t i, j, w
    cdef int64_t d
    out = np.empty((r, r), dtype=np.int64)
    cdef int64_t[:, ::1] g = out
    with nogil:
        for i in range(r):
            g[i, i] = n
            for j in range(i + 1, r):
                d = 0
                for w in range(nw):
                    d += __builtin_popcountll(words[i, w] ^ words[j, w])
                g[i, j] = n - 2 * d
                g[j, i] = n - 2 * d
    return out


def pair_histogram(const uint64_t[::1] values, Py_ssize_t n):
    cdef Py_ssize_t m = values.shape[0], i, j
    out = np.zeros(n + 1, dtype=np.int64)
    cdef int64_t[::1] h = out
    cdef uint64_t a
    with nogil:
        for i in range(m):
            a = values[i]
            for j in range(m):
                h[__builtin_popcountll(a ^ values[j])] += 1
    return out


def clique_search(const uint64_t[::1] values, int half, int target, int mode,
                  Py_ssize_t root_lo=0, Py_ssize_t root_hi=-1,
                  long long max_nodes=0, double max_seconds=0.0):
    cdef Py_ssize_t size0 = values.shape[0]
    if root_hi < 0 or root_hi > size0:
        root_hi = size0
    if mode != MODE_FIRST and mode != MODE_MAX:
        raise ValueError(f"unknown search mode {mode}")
    if target == 0:
        return True, [], 0

    cdef double deadline = time.monotonic() + max_seconds if max_seconds > 0 else 0.0
    cdef int levels = target + 1
    cdef Py_ssize_t **pools = <Py_ssize_t **> malloc(levels * sizeof(Py_ssize_t *))
    cdef Py_ssize_t *caps = <Py_ssize_t *> malloc(levels * sizeof(Py_ssize_t))
    cdef Py_ssize_t *sizes = <Py_ssize_t *> malloc(levels * sizeof(Py_ssize_t))
    cdef Py_ssize_t *cursor = <Py_ssize_t *> malloc(levels * sizeof(Py_ssize_t))
    cdef Py_ssize_t *chosen = <Py_ssize_t *> malloc(levels * sizeof(Py_ssize_t))
    cdef Py_ssize_t *best = <Py_ssize_t *> malloc(levels * sizeof(Py_ssize_t))
    if not (pools and caps and sizes and cursor and chosen and best):
        raise MemoryError()
    cdef int d
    for d in range(levels):
        pools[d] = NULL
        caps[d] = 0

    cdef long long nodes = 0
    cdef int depth = 0, bestlen = 0
    cdef bint complete = True
    cdef Py_ssize_t pos, size, hi, k, cnt, c, q
    cdef Py_ssize_t *pool
    cdef Py_ssize_t *child
    cdef uint64_t vc
    try:
        pools[0] = <Py_ssize_t *> malloc((size0 + 1) * sizeof(Py_ssize_t))
        if pools[0] == NULL:
            raise MemoryError()
        caps[0] = size0 + 1
        for k in range(size0):
            pools[0][k] = k
        sizes[0] = size0
        cursor[0] = root_lo

        while True:
            pool = pools[depth]
            size = sizes[depth]
            pos = cursor[depth]
            hi = root_hi if depth == 0 else size
            if pos < hi and (
                (mode == MODE_FIRST and size - pos >= target - depth)
                or (mode == MODE_MAX and depth + size - pos > bestlen)
            ):
                if max_nodes and nodes >= max_nodes:
                    complete = False
                    break
                if deadline and nodes % CHECK_EVERY == 0 and time.monotonic() > deadline:
                    complete = False
                    break
                nodes += 1
                cursor[depth] = pos + 1
                c = pool[pos]
                vc = values[c]
                cnt = size - pos - 1
                if caps[depth + 1] < cnt + 1:
                    child = <Py_ssize_t *> realloc(pools[depth + 1], (cnt + 1) * sizeof(Py_ssize_t))
                    if child == NULL:
                        raise MemoryError()
                    pools[depth + 1] = child
                    caps[depth + 1] = cnt + 1
                child = pools[depth + 1]
                cnt = 0
                with nogil:
                    for k in range(pos + 1, size):
                        q = pool[k]
                        if __builtin_popcountll(vc ^ values[q]) == half:
                            child[cnt] = q
                            cnt += 1
                chosen[depth] = c
                depth += 1
                sizes[depth] = cnt
                cursor[depth] = 0
                if depth > bestlen:
                    bestlen = depth
                    for k in range(depth):
                        best[k] = chosen[k]
                if depth == target:
                    break
            else:
                if depth == 0:
                    break
                depth -= 1
        return complete, [best[k] for k in range(bestlen)], nodes
    finally:
        for d in range(levels):
            free(pools[d])
        free(pools)
        free(caps)
        free(sizes)
        free(cursor)
        free(chosen)
        free(best)
