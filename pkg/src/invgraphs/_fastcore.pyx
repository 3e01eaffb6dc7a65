# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled canonicalization kernels; see _purecore for the fallback."""
import numpy as np

NAME = "compiled"


def min_image(bits, gather, weights):
    cdef unsigned char[::1] b = np.ascontiguousarray(bits, dtype=np.uint8)
    cdef int[:, ::1] g = np.ascontiguousarray(gather, dtype=np.int32)
    cdef long long[::1] w = np.ascontiguousarray(weights, dtype=np.int64)
    cdef Py_ssize_t rows = g.shape[0], e = g.shape[1]
    cdef Py_ssize_t t, q
    cdef long long best = -1, cur
    for t in range(rows):
        cur = 0
        for q in range(e):
            if b[g[t, q]]:
                cur += w[q]
            if best >= 0 and cur > best:
                break
        else:
            if best < 0 or cur < best:
                best = cur
    return int(best)


def stabilizer_count(bits, gather, weights):
    cdef unsigned char[::1] b = np.ascontiguousarray(bits, dtype=np.uint8)
    cdef int[:, ::1] g = np.ascontiguousarray(gather, dtype=np.int32)
    cdef long long[::1] w = np.ascontiguousarray(weights, dtype=np.int64)
    cdef Py_ssize_t rows = g.shape[0], e = g.shape[1]
    cdef Py_ssize_t t, q
    cdef long long orig = 0, cur
    cdef long long count = 0
    for q in range(e):
        if b[q]:
            orig += w[q]
    for t in range(rows):
        cur = 0
        for q in range(e):
            if b[g[t, q]]:
                cur += w[q]
        if cur == orig:
            count += 1
    return int(count)


def orbit_table(n_pairs, gather, weights):
    cdef int[:, ::1] g = np.ascontiguousarray(gather, dtype=np.int32)
    cdef Py_ssize_t rows = g.shape[0], e = g.shape[1]
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n_pairs
    table_arr = np.full(size, -1, dtype=np.int32)
    cdef int[::1] table = table_arr
    cdef unsigned char[::1] b = np.zeros(e, dtype=np.uint8)
    cdef Py_ssize_t mask, t, q
    cdef long long img
    for mask in range(size):
        if table[mask] >= 0:
            continue
        for q in range(e):
            b[q] = (mask >> (e - 1 - q)) & 1
        for t in range(rows):
            img = 0
            for q in range(e):
                if b[g[t, q]]:
                    img += (<long long>1) << (e - 1 - q)
            table[img] = <int>mask
    return table_arr
