# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_pykernels``."""
from libc.math cimport log, log1p, floor
from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t, uint64_t

BACKEND = "cython"


def collision_stop(const int64_t[::1] samples, int64_t k):
    cdef Py_ssize_t n = samples.shape[0]
    cdef Py_ssize_t size = 16
    cdef int shift = 60
    while size < 2 * n:
        size <<= 1
        shift -= 1
    cdef uint64_t mask = size - 1
    cdef int64_t *keys = <int64_t *> malloc(size * sizeof(int64_t))
    cdef int64_t *counts = <int64_t *> malloc(size * sizeof(int64_t))
    if keys == NULL or counts == NULL:
        free(keys)
        free(counts)
        raise MemoryError()
    cdef Py_ssize_t i, j
    for j in range(size):
        keys[j] = -1
        counts[j] = 0
    cdef int64_t pairs = 0, x
    cdef uint64_t h
    cdef Py_ssize_t result = -1
    for i in range(n):
        x = samples[i]
        h = (<uint64_t> x * 0x9E3779B97F4A7C15ULL) >> shift
        h &= mask
        while keys[h] != -1 and keys[h] != x:
            h = (h + 1) & mask
        keys[h] = x
        pairs += counts[h]
        counts[h] += 1
        if pairs >= k:
            result = i + 1
            break
    free(keys)
    free(counts)
    return result


def chung_lu_block(const double[::1] w, double total, const double[::1] uniforms,
                   Py_ssize_t pos, Py_ssize_t u, Py_ssize_t v, double p,
                   int64_t[::1] out_src, int64_t[::1] out_dst):
    cdef Py_ssize_t n = w.shape[0]
    cdef Py_ssize_t nu = uniforms.shape[0]
    cdef Py_ssize_t cap = out_src.shape[0]
    cdef Py_ssize_t ne = 0
    cdef double q, r, skip
    while u < n - 1:
        if p < 0:
            v = u + 1
            p = w[u] * w[v] / total
            if p > 1.0:
                p = 1.0
        if v >= n or p <= 0:
            u += 1
            p = -1.0
            continue
        if pos + 2 > nu or ne >= cap:
            break
        if p < 1.0:
            r = 1.0 - uniforms[pos]
            pos += 1
            skip = floor(log(r) / log1p(-p))
            if skip >= n:
                v = n
            else:
                v += <Py_ssize_t> skip
        if v < n:
            q = w[u] * w[v] / total
            if q > 1.0:
                q = 1.0
            if uniforms[pos] < q / p:
                out_src[ne] = u
                out_dst[ne] = v
                ne += 1
            pos += 1
            p = q
            v += 1
    return ne, pos, u, v, p
