# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Legendre recurrence kernels.

Same surface as ``_kernels_py``; per element the arithmetic runs in the
identical order, so results match the numpy fallback bit for bit (the
build disables FMA contraction for this reason).  Loops are degree-outer
with contiguous point-inner bodies so the compiler can vectorize them.
``weighted_moments`` is the one exception to bitwise parity: its
accumulation order differs from numpy's pairwise reduction, giving
rounding-level discrepancies only.
"""

from libc.math cimport fabs

import numpy as np

BACKEND_NAME = "cython"


def sequence_at(double x, Py_ssize_t n_max):
    """P_0(x) .. P_{n_max}(x) at a scalar x by the upward recurrence."""
    out = np.empty(n_max + 1)
    cdef double[::1] v = out
    cdef Py_ssize_t k
    v[0] = 1.0
    if n_max == 0:
        return out
    v[1] = x
    for k in range(1, n_max):
        v[k + 1] = ((2.0 * k + 1.0) * x * v[k] - k * v[k - 1]) / (k + 1.0)
    return out


def eval_at(Py_ssize_t n, xs):
    """P_n at each grid point."""
    x_arr = np.ascontiguousarray(xs, dtype=np.float64)
    cdef double[::1] x = x_arr
    cdef Py_ssize_t m = x.shape[0]
    if n == 0:
        return np.ones(m)
    cdef double[::1] pp = np.ones(m)
    cdef double[::1] pc = x_arr.copy()
    cdef Py_ssize_t i, k
    cdef double c1, c2, c3
    for k in range(1, n):
        c1 = 2.0 * k + 1.0
        c2 = k
        c3 = k + 1.0
        for i in range(m):
            pp[i] = (c1 * x[i] * pc[i] - c2 * pp[i]) / c3
        pp, pc = pc, pp
    return np.asarray(pc)


def eval_with_derivative(Py_ssize_t n, xs):
    """(P_n, P_n') at interior points, via P_n' = n(P_{n-1} - x P_n)/(1-x^2)."""
    x_arr = np.ascontiguousarray(xs, dtype=np.float64)
    cdef double[::1] x = x_arr
    cdef Py_ssize_t m = x.shape[0]
    if n == 0:
        return np.ones(m), np.zeros(m)
    ders = np.empty(m)
    cdef double[::1] d = ders
    cdef double[::1] pp = np.ones(m)
    cdef double[::1] pc = x_arr.copy()
    cdef Py_ssize_t i, k
    cdef double c1, c2, c3, nn = n
    for k in range(1, n):
        c1 = 2.0 * k + 1.0
        c2 = k
        c3 = k + 1.0
        for i in range(m):
            pp[i] = (c1 * x[i] * pc[i] - c2 * pp[i]) / c3
        pp, pc = pc, pp
    for i in range(m):
        d[i] = nn * (pp[i] - x[i] * pc[i]) / ((1.0 - x[i]) * (1.0 + x[i]))
    return np.asarray(pc), ders


def series_eval(coeffs, xs):
    """sum_n coeffs[n] P_n(x) in one upward recurrence pass."""
    cdef double[::1] a = np.ascontiguousarray(coeffs, dtype=np.float64)
    x_arr = np.ascontiguousarray(xs, dtype=np.float64)
    cdef double[::1] x = x_arr
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t m = x.shape[0]
    out = np.full(m, a[0])
    cdef double[::1] acc = out
    if n == 1:
        return out
    cdef double[::1] pp = np.ones(m)
    cdef double[::1] pc = x_arr.copy()
    cdef Py_ssize_t i, k
    cdef double c1, c2, c3, ak, pn
    ak = a[1]
    for i in range(m):
        acc[i] = acc[i] + ak * x[i]
    for k in range(1, n - 1):
        c1 = 2.0 * k + 1.0
        c2 = k
        c3 = k + 1.0
        ak = a[k + 1]
        for i in range(m):
            pn = (c1 * x[i] * pc[i] - c2 * pp[i]) / c3
            pp[i] = pn
            acc[i] = acc[i] + ak * pn
        pp, pc = pc, pp
    return out


def degree_weighted_absmax(xs, weights, Py_ssize_t n_max):
    """max_i weights[i]*|P_n(xs[i])| for every n <= n_max, one sweep."""
    x_arr = np.ascontiguousarray(xs, dtype=np.float64)
    cdef double[::1] x = x_arr
    cdef double[::1] w = np.ascontiguousarray(weights, dtype=np.float64)
    cdef Py_ssize_t m = x.shape[0]
    out = np.zeros(n_max + 1)
    cdef double[::1] v = out
    cdef Py_ssize_t i, k
    cdef double c1, c2, c3, t, mx, pn
    mx = 0.0
    for i in range(m):
        t = w[i] * fabs(1.0)
        if t > mx:
            mx = t
    v[0] = mx
    if n_max == 0:
        return out
    cdef double[::1] pp = np.ones(m)
    cdef double[::1] pc = x_arr.copy()
    mx = 0.0
    for i in range(m):
        t = w[i] * fabs(pc[i])
        if t > mx:
            mx = t
    v[1] = mx
    for k in range(1, n_max):
        c1 = 2.0 * k + 1.0
        c2 = k
        c3 = k + 1.0
        mx = 0.0
        for i in range(m):
            pn = (c1 * x[i] * pc[i] - c2 * pp[i]) / c3
            pp[i] = pn
            t = w[i] * fabs(pn)
            if t > mx:
                mx = t
        v[k + 1] = mx
        pp, pc = pc, pp
    return out


def running_sup_errors(coeffs, xs, ref):
    """sup_i |ref[i] - S_N(xs[i])| for every truncation N = 1..len(coeffs)."""
    cdef double[::1] a = np.ascontiguousarray(coeffs, dtype=np.float64)
    x_arr = np.ascontiguousarray(xs, dtype=np.float64)
    cdef double[::1] x = x_arr
    cdef double[::1] r = np.ascontiguousarray(ref, dtype=np.float64)
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t m = x.shape[0]
    out = np.zeros(n)
    cdef double[::1] v = out
    cdef double[::1] acc = np.full(m, a[0])
    cdef Py_ssize_t i, k
    cdef double c1, c2, c3, ak, t, mx, pn
    mx = 0.0
    for i in range(m):
        t = fabs(r[i] - acc[i])
        if t > mx:
            mx = t
    v[0] = mx
    if n == 1:
        return out
    cdef double[::1] pp = np.ones(m)
    cdef double[::1] pc = x_arr.copy()
    ak = a[1]
    mx = 0.0
    for i in range(m):
        acc[i] = acc[i] + ak * x[i]
        t = fabs(r[i] - acc[i])
        if t > mx:
            mx = t
    v[1] = mx
    for k in range(1, n - 1):
        c1 = 2.0 * k + 1.0
        c2 = k
        c3 = k + 1.0
        ak = a[k + 1]
        mx = 0.0
        for i in range(m):
            pn = (c1 * x[i] * pc[i] - c2 * pp[i]) / c3
            pp[i] = pn
            acc[i] = acc[i] + ak * pn
            t = fabs(r[i] - acc[i])
            if t > mx:
                mx = t
        v[k + 1] = mx
        pp, pc = pc, pp
    return out


def weighted_moments(xs, fw, Py_ssize_t n_max):
    """sum_i fw[i]*P_n(xs[i]) for every n <= n_max (quadrature projections)."""
    x_arr = np.ascontiguousarray(xs, dtype=np.float64)
    cdef double[::1] x = x_arr
    cdef double[::1] f = np.ascontiguousarray(fw, dtype=np.float64)
    cdef Py_ssize_t m = x.shape[0]
    out = np.zeros(n_max + 1)
    cdef double[::1] v = out
    cdef Py_ssize_t i, k
    cdef double c1, c2, c3, s, pn
    s = 0.0
    for i in range(m):
        s += f[i]
    v[0] = s
    if n_max == 0:
        return out
    cdef double[::1] pp = np.ones(m)
    cdef double[::1] pc = x_arr.copy()
    s = 0.0
    for i in range(m):
        s += f[i] * pc[i]
    v[1] = s
    for k in range(1, n_max):
        c1 = 2.0 * k + 1.0
        c2 = k
        c3 = k + 1.0
        s = 0.0
        for i in range(m):
            pn = (c1 * x[i] * pc[i] - c2 * pp[i]) / c3
            pp[i] = pn
            s += f[i] * pn
        v[k + 1] = s
        pp, pc = pc, pp
    return out
