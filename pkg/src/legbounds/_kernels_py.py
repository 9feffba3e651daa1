"""Pure-numpy implementations of the hot Legendre recurrence kernels.

Fallback backend used when the compiled extension is unavailable.  Every
function mirrors the arithmetic of ``_ckernels.pyx`` operation for
operation, so the two backends produce bit-identical results (except
``weighted_moments``, whose reductions differ at rounding level).
"""

import numpy as np

BACKEND_NAME = "numpy"


def sequence_at(x, n_max):
    """P_0(x) .. P_{n_max}(x) at a scalar x by the upward recurrence."""
    out = np.empty(n_max + 1)
    out[0] = 1.0
    if n_max == 0:
        return out
    out[1] = x
    for k in range(1, n_max):
        out[k + 1] = ((2.0 * k + 1.0) * x * out[k] - k * out[k - 1]) / (k + 1.0)
    return out


def eval_at(n, xs):
    """P_n at each grid point."""
    xs = np.ascontiguousarray(xs, dtype=np.float64)
    if n == 0:
        return np.ones_like(xs)
    p_prev = np.ones_like(xs)
    p_cur = xs.copy()
    for k in range(1, n):
        p_next = ((2.0 * k + 1.0) * xs * p_cur - k * p_prev) / (k + 1.0)
        p_prev, p_cur = p_cur, p_next
    return p_cur


def eval_with_derivative(n, xs):
    """(P_n, P_n') at interior points, via P_n' = n(P_{n-1} - x P_n)/(1-x^2)."""
    xs = np.ascontiguousarray(xs, dtype=np.float64)
    if n == 0:
        return np.ones_like(xs), np.zeros_like(xs)
    p_prev = np.ones_like(xs)
    p_cur = xs.copy()
    for k in range(1, n):
        p_next = ((2.0 * k + 1.0) * xs * p_cur - k * p_prev) / (k + 1.0)
        p_prev, p_cur = p_cur, p_next
    deriv = n * (p_prev - xs * p_cur) / ((1.0 - xs) * (1.0 + xs))
    return p_cur, deriv


def series_eval(coeffs, xs):
    """sum_n coeffs[n] P_n(x) in one upward recurrence pass."""
    coeffs = np.ascontiguousarray(coeffs, dtype=np.float64)
    xs = np.ascontiguousarray(xs, dtype=np.float64)
    n = coeffs.shape[0]
    acc = np.full_like(xs, coeffs[0])
    if n == 1:
        return acc
    p_prev = np.ones_like(xs)
    p_cur = xs.copy()
    acc = acc + coeffs[1] * xs
    for k in range(1, n - 1):
        p_next = ((2.0 * k + 1.0) * xs * p_cur - k * p_prev) / (k + 1.0)
        acc = acc + coeffs[k + 1] * p_next
        p_prev, p_cur = p_cur, p_next
    return acc


def degree_weighted_absmax(xs, weights, n_max):
    """max_i weights[i]*|P_n(xs[i])| for every n <= n_max, one sweep."""
    xs = np.ascontiguousarray(xs, dtype=np.float64)
    weights = np.ascontiguousarray(weights, dtype=np.float64)
    out = np.empty(n_max + 1)
    p_prev = np.ones_like(xs)
    out[0] = np.max(weights * np.abs(p_prev))
    if n_max == 0:
        return out
    p_cur = xs.copy()
    out[1] = np.max(weights * np.abs(p_cur))
    for k in range(1, n_max):
        p_next = ((2.0 * k + 1.0) * xs * p_cur - k * p_prev) / (k + 1.0)
        out[k + 1] = np.max(weights * np.abs(p_next))
        p_prev, p_cur = p_cur, p_next
    return out


def running_sup_errors(coeffs, xs, ref):
    """sup_i |ref[i] - S_N(xs[i])| for every truncation N = 1..len(coeffs)."""
    coeffs = np.ascontiguousarray(coeffs, dtype=np.float64)
    xs = np.ascontiguousarray(xs, dtype=np.float64)
    ref = np.ascontiguousarray(ref, dtype=np.float64)
    n = coeffs.shape[0]
    out = np.empty(n)
    acc = np.full_like(xs, coeffs[0])
    out[0] = np.max(np.abs(ref - acc))
    if n == 1:
        return out
    p_prev = np.ones_like(xs)
    p_cur = xs.copy()
    acc = acc + coeffs[1] * xs
    out[1] = np.max(np.abs(ref - acc))
    for k in range(1, n - 1):
        p_next = ((2.0 * k + 1.0) * xs * p_cur - k * p_prev) / (k + 1.0)
        acc = acc + coeffs[k + 1] * p_next
        out[k + 1] = np.max(np.abs(ref - acc))
        p_prev, p_cur = p_cur, p_next
    return out


def weighted_moments(xs, fw, n_max):
    """sum_i fw[i]*P_n(xs[i]) for every n <= n_max (quadrature projections)."""
    xs = np.ascontiguousarray(xs, dtype=np.float64)
    fw = np.ascontiguousarray(fw, dtype=np.float64)
    out = np.empty(n_max + 1)
    p_prev = np.ones_like(xs)
    out[0] = np.dot(fw, p_prev)
    if n_max == 0:
        return out
    p_cur = xs.copy()
    out[1] = np.dot(fw, p_cur)
    for k in range(1, n_max):
        p_next = ((2.0 * k + 1.0) * xs * p_cur - k * p_prev) / (k + 1.0)
        out[k + 1] = np.dot(fw, p_next)
        p_prev, p_cur = p_cur, p_next
    return out
