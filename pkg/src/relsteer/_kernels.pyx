# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled grid kernel: closed-form Bloch table, steering values and Horodecki terms."""

import numpy as np
from libc.math cimport cos, sin, log2, sqrt, fabs

# output channels per (alpha, beta, partition) cell
cdef enum:
    N_OUT = 5


cdef inline double xlogx(double x) noexcept nogil:
    if x <= 0.0:
        return 0.0
    return x * log2(x)


cdef inline double pair(double x) noexcept nogil:
    return xlogx(1.0 + x) + xlogx(1.0 - x)


cdef inline void fill(double c1, double c2, double c3, double r, double s,
                      double* out) noexcept nogil:
    cdef double common = pair(c1) + pair(c2) + 0.5 * (
        xlogx(1.0 + c3 + r + s) + xlogx(1.0 + c3 - r - s)
        + xlogx(1.0 - c3 - r + s) + xlogx(1.0 - c3 + r - s))
    cdef double f = fabs(c1 - c2) / 4.0
    cdef double g = fabs(c1 + c2) / 4.0
    out[0] = common - pair(r)
    out[1] = common - pair(s)
    out[2] = 4.0 * (f + g) * (f + g)
    out[3] = 4.0 * (f - g) * (f - g)
    out[4] = c3 * c3


def grid_terms(double[:] alphas, double[:] betas):
    """Return an (n_alpha, n_beta, 3, 5) array of (si_ab, si_ba, mu1, mu2, mu3).

    Partition axis order is AB1, AB2, B1B2.
    """
    cdef Py_ssize_t na = alphas.shape[0], nb = betas.shape[0], i, j
    result = np.empty((na, nb, 3, N_OUT), dtype=np.float64)
    cdef double[:, :, :, ::1] out = result
    cdef double a, b, ca2, sa2, s2a, c2a, s2b, c2b, cb, sb
    with nogil:
        for i in range(na):
            a = alphas[i]
            ca2 = cos(a) * cos(a)
            sa2 = sin(a) * sin(a)
            s2a = sin(2.0 * a)
            c2a = cos(2.0 * a)
            for j in range(nb):
                b = betas[j]
                cb = cos(b)
                sb = sin(b)
                s2b = sin(2.0 * b)
                c2b = cos(2.0 * b)
                fill(s2a * cb, -s2a * cb, c2b * ca2 + sa2, c2a, c2b * ca2 - sa2,
                     &out[i, j, 0, 0])
                fill(s2a * sb, s2a * sb, c2b * ca2 - sa2, c2a, c2b * ca2 + sa2,
                     &out[i, j, 1, 0])
                fill(s2b * ca2, -s2b * ca2, c2a, c2b * ca2 - sa2, c2b * ca2 + sa2,
                     &out[i, j, 2, 0])
    return result
