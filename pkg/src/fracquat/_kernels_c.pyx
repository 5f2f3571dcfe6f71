# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled quadrature kernels: lower-triangular convolution loops.

Contracts match `_kernels_py`.  The quadrature weights are produced by the
same vectorized numpy expressions as the fallback (so the two backends
differ only in summation order); the O(N^2) triangle accumulation runs in
C with real and imaginary parts in separate contiguous arrays, which the
compiler vectorizes."""

import math

import numpy as np


cdef void _triangle(const double[::1] w, const double[::1] xre, const double[::1] xim,
                    double[::1] outre, double[::1] outim, Py_ssize_t n) noexcept nogil:
    # out[k] = sum_{j < k} w[k-1-j] * x[j], written into slots 1..n
    cdef Py_ssize_t k, j, m
    cdef double acc_re, acc_im
    for k in range(1, n + 1):
        acc_re = 0.0
        acc_im = 0.0
        m = k - 1
        for j in range(k):
            acc_re += w[m - j] * xre[j]
            acc_im += w[m - j] * xim[j]
        outre[k] = acc_re
        outim[k] = acc_im


def _l1_weights(Py_ssize_t n, double alpha):
    m = np.arange(n, dtype=np.float64)
    return (m + 1.0) ** (1.0 - alpha) - m ** (1.0 - alpha)


def _rl_weights(Py_ssize_t n, double alpha):
    m = np.arange(1, n + 1, dtype=np.float64)
    mm1 = m - 1.0
    ma = m**alpha
    mm1a = mm1**alpha
    ma1 = ma * m
    mm1a1 = mm1a * mm1
    far = (ma1 - mm1a1) / (alpha + 1.0) - mm1 * (ma - mm1a) / alpha
    near = ma1 * (1.0 / alpha - 1.0 / (alpha + 1.0)) - m * mm1a / alpha + mm1a1 / (alpha + 1.0)
    return far, near


def l1_caputo_kernel(values, double h, double alpha):
    f = np.ascontiguousarray(values, dtype=np.complex128)
    cdef Py_ssize_t n = f.shape[0] - 1
    diffs = np.diff(f)
    cdef const double[::1] dre = np.ascontiguousarray(diffs.real)
    cdef const double[::1] dim = np.ascontiguousarray(diffs.imag)
    cdef const double[::1] w = _l1_weights(n, alpha)
    out_re = np.zeros(n + 1, dtype=np.float64)
    out_im = np.zeros(n + 1, dtype=np.float64)
    cdef double[::1] ore = out_re
    cdef double[::1] oim = out_im
    with nogil:
        _triangle(w, dre, dim, ore, oim, n)
    out = out_re + 1j * out_im
    out *= h ** (-alpha) / math.gamma(2.0 - alpha)
    return out


def rl_integral_kernel(values, double h, double alpha):
    f = np.ascontiguousarray(values, dtype=np.complex128)
    cdef Py_ssize_t n = f.shape[0] - 1
    cdef const double[::1] fre = np.ascontiguousarray(f.real)
    cdef const double[::1] fim = np.ascontiguousarray(f.imag)
    far_arr, near_arr = _rl_weights(n, alpha)
    cdef const double[::1] far = far_arr
    cdef const double[::1] near = near_arr
    out_re = np.zeros(n + 1, dtype=np.float64)
    out_im = np.zeros(n + 1, dtype=np.float64)
    cdef double[::1] ore = out_re
    cdef double[::1] oim = out_im
    cdef Py_ssize_t k, j, m
    cdef double acc_re, acc_im
    with nogil:
        for k in range(1, n + 1):
            acc_re = 0.0
            acc_im = 0.0
            m = k - 1
            for j in range(k):
                # interval [x_j, x_{j+1}] seen from node k at distance k - j
                acc_re += far[m - j] * fre[j] + near[m - j] * fre[j + 1]
                acc_im += far[m - j] * fim[j] + near[m - j] * fim[j + 1]
            ore[k] = acc_re
            oim[k] = acc_im
    out = out_re + 1j * out_im
    out *= h**alpha / math.gamma(alpha)
    return out
