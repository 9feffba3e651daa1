"""A-priori bounds on Legendre coefficients and truncation error.

B1 is the sharp coefficient bound built on the weighted Bernstein ratio:

    |a_n| <= 2 V_m / sqrt(pi(2n - 2m - 1)) * prod_{k=1..m} h_{n-k},   n >= m+1,

with the empty product equal to one for m = 0.  B2 is the earlier bound

    |a_n| <= V_hat_m / ((n-1/2)(n-3/2)...(n-m+1/2)) * sqrt(pi / (2(n-m-1))),

valid for n >= m+2.  Summing B1 over the tail (a telescoping product
identity collapses the sum) gives the uniform error bound and, inverted,
a guaranteed degree selector for a target accuracy.
"""

import math
from dataclasses import dataclass

import numpy as np

from .legendre import normalization_h
from .series import abs_kink_series

__all__ = [
    "BoundParameters",
    "BoundTable",
    "bound_B1",
    "bound_B2",
    "ratio_B1_B2",
    "uniform_error_bound",
    "telescoping_tail",
    "min_degree_for_tolerance",
    "abs_kink_bound_table",
]


@dataclass(frozen=True)
class BoundParameters:
    """Smoothness order m and the semi-norms V_m (and optionally V_hat_m)."""

    m: int
    V: float
    V_hat: float | None = None

    def __post_init__(self):
        if self.m != int(self.m) or self.m < 0:
            raise ValueError(f"m must be a nonnegative integer, got {self.m!r}")
        if not (np.isfinite(self.V) and self.V >= 0.0):
            raise ValueError(f"V must be finite and nonnegative, got {self.V!r}")
        if self.V_hat is not None and not (np.isfinite(self.V_hat) and self.V_hat >= 0.0):
            raise ValueError(f"V_hat must be finite and nonnegative, got {self.V_hat!r}")


def _h_product(n, k_first, k_last):
    """prod_{k=k_first..k_last} h_{n-k}, factors multiplied in increasing k."""
    prod = 1.0
    for k in range(k_first, k_last + 1):
        prod *= normalization_h(n - k)
    return prod


def bound_B1(n, p):
    """The sharp coefficient bound at degree n; requires n >= m + 1."""
    m = p.m
    if n != int(n) or n < m + 1:
        raise ValueError(f"B1 requires an integer n >= m + 1 = {m + 1}, got {n!r}")
    n = int(n)
    return 2.0 * p.V / math.sqrt(math.pi * (2 * n - 2 * m - 1)) * _h_product(n, 1, m)


def bound_B2(n, p):
    """The prior coefficient bound at degree n; requires n >= m + 2 and V_hat."""
    m = p.m
    if p.V_hat is None:
        raise ValueError("B2 requires the V_hat semi-norm")
    if n != int(n) or n < m + 2:
        raise ValueError(f"B2 requires an integer n >= m + 2 = {m + 2}, got {n!r}")
    n = int(n)
    denom = 1.0
    for k in range(m):
        denom *= n - 0.5 - k
    return p.V_hat / denom * math.sqrt(math.pi / (2.0 * (n - m - 1)))


def ratio_B1_B2(n, t):
    """Closed form of B1/B2 for the kink function |x - t|, n >= 3.

    Equals (2(1-t^2)^{1/4}/pi) sqrt((2n-4)/(2n-3)), strictly below its
    n -> infinity limit 2(1-t^2)^{1/4}/pi.
    """
    if n != int(n) or n < 3:
        raise ValueError(f"ratio requires an integer n >= 3, got {n!r}")
    t = float(t)
    if not -1.0 < t < 1.0:
        raise ValueError(f"kink location must lie in (-1, 1), got {t!r}")
    n = int(n)
    quarter = ((1.0 - t) * (1.0 + t)) ** 0.25
    return 2.0 * quarter / math.pi * math.sqrt((2.0 * n - 4.0) / (2.0 * n - 3.0))


def uniform_error_bound(N, p):
    """Bound on sup |f - f_N| from the coefficient tail; m >= 1 only.

    m = 1 needs N >= 3 and gives 4 V_1 / sqrt(pi(2N-5)); m >= 2 needs
    N >= m + 1 and gives 2 V_m / ((m-1) sqrt(pi(2N-2m-1))) prod_{k=2..m} h_{N-k}.
    """
    m = p.m
    if m == 0:
        raise ValueError("the uniform error bound has no m = 0 case; "
                         "only the coefficient bound B1 is available there")
    if m == 1:
        if N != int(N) or N < 3:
            raise ValueError(f"m = 1 requires an integer N >= 3, got {N!r}")
        N = int(N)
        return 4.0 * p.V / math.sqrt(math.pi * (2 * N - 5))
    if N != int(N) or N < m + 1:
        raise ValueError(f"m = {m} requires an integer N >= {m + 1}, got {N!r}")
    N = int(N)
    return (
        2.0 * p.V / ((m - 1) * math.sqrt(math.pi * (2 * N - 2 * m - 1)))
        * _h_product(N, 2, m)
    )


def telescoping_tail(N, m, M):
    """(partial sum, closed form) of sum_{n>=N} prod_{k=1..m} h_{n-k}.

    The product telescopes: it equals (G(n-1) - G(n))/(m-1) with
    G(n) = prod_{k=1..m-1} h_{n-k}, so the infinite sum collapses to
    (1/(m-1)) prod_{k=2..m} h_{N-k}.  The partial sum runs n = N..M.
    """
    if m != int(m) or m < 2:
        raise ValueError(f"the telescoping identity needs an integer m >= 2, got {m!r}")
    m = int(m)
    if N != int(N) or N < m + 1:
        raise ValueError(f"need an integer N >= m + 1 = {m + 1}, got {N!r}")
    N = int(N)
    if M != int(M) or M < N:
        raise ValueError(f"need an integer M >= N = {N}, got {M!r}")
    M = int(M)
    n = np.arange(N, M + 1, dtype=np.float64)
    terms = np.ones_like(n)
    for k in range(1, m + 1):
        terms /= n - k + 0.5
    partial = float(np.sum(terms))
    closed = _h_product(N, 2, m) / (m - 1)
    return partial, closed


def min_degree_for_tolerance(eps, p):
    """Smallest N in the bound's domain with uniform_error_bound(N) <= eps.

    The m = 1 case inverts the bound in closed form and polishes by a
    local scan; m >= 2 scans by doubling then bisection (the bound is
    strictly decreasing in N, so a minimizer always exists).
    """
    if not eps > 0.0:
        raise ValueError(f"tolerance must be positive, got {eps!r}")
    if p.m < 1:
        raise ValueError("degree selection needs m >= 1")
    if not p.V > 0.0:
        raise ValueError("degree selection needs V > 0")

    if p.m == 1:
        raw = (16.0 * p.V * p.V / (math.pi * eps * eps) + 5.0) / 2.0
        N = max(3, math.ceil(raw))
        while N > 3 and uniform_error_bound(N - 1, p) <= eps:
            N -= 1
        while uniform_error_bound(N, p) > eps:
            N += 1
        return N

    lo = p.m + 1
    if uniform_error_bound(lo, p) <= eps:
        return lo
    hi = 2 * lo
    while uniform_error_bound(hi, p) > eps:
        lo = hi
        hi *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if uniform_error_bound(mid, p) <= eps:
            hi = mid
        else:
            lo = mid
    return hi


@dataclass(frozen=True)
class BoundTable:
    """Per-degree records of |a_n|, B1, B2 and their ratio for one function."""

    n: np.ndarray
    abs_a: np.ndarray
    B1: np.ndarray
    B2: np.ndarray
    ratio: np.ndarray


def abs_kink_bound_table(t, n_values):
    """BoundTable for |x - t| with its closed-form semi-norms.

    Every requested degree must satisfy n >= 3 so both bounds apply.
    """
    t = float(t)
    if not -1.0 < t < 1.0:
        raise ValueError(f"kink location must lie in (-1, 1), got {t!r}")
    n = np.asarray(n_values, dtype=np.int64)
    if n.size == 0 or np.any(n < 3):
        raise ValueError("bound table degrees must all be >= 3")
    one_minus_sq = (1.0 - t) * (1.0 + t)
    params = BoundParameters(m=1, V=2.0 * one_minus_sq**-0.25,
                             V_hat=2.0 * one_minus_sq**-0.5)
    series = abs_kink_series(t, int(n.max()) + 1)
    abs_a = np.abs(series.coefficients[n])
    b1 = np.array([bound_B1(int(k), params) for k in n])
    b2 = np.array([bound_B2(int(k), params) for k in n])
    return BoundTable(n=n, abs_a=abs_a, B1=b1, B2=b2, ratio=b1 / b2)
