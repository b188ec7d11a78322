# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled scoring kernel: summed Euclidean distances per candidate pair."""

import numpy as np

cimport numpy as cnp
from libc.math cimport sqrt

cnp.import_array()


def batch_scores(const double[:, ::1] pun not None,
                 const double[:, ::1] alt not None,
                 const double[:, ::1] ctx not None):
    """out[j] = sum_i ||pun[j]-ctx[i]|| + sum_i ||alt[j]-ctx[i]||."""
    cdef Py_ssize_t n = pun.shape[0]
    cdef Py_ssize_t d = pun.shape[1]
    cdef Py_ssize_t m = ctx.shape[0]
    if alt.shape[0] != n or alt.shape[1] != d or ctx.shape[1] != d:
        raise ValueError("shape mismatch between pun/alt/ctx matrices")

    out = np.empty(n, dtype=np.float64)
    cdef double[::1] o = out
    cdef Py_ssize_t j, i, k
    cdef double acc, s, diff

    for j in range(n):
        acc = 0.0
        for i in range(m):
            s = 0.0
            for k in range(d):
                diff = pun[j, k] - ctx[i, k]
                s += diff * diff
            acc += sqrt(s)
            s = 0.0
            for k in range(d):
                diff = alt[j, k] - ctx[i, k]
                s += diff * diff
            acc += sqrt(s)
        o[j] = acc
    return out
