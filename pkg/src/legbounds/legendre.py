"""Legendre polynomials, their derivatives, and the sharp weighted ratio.

Everything here is a pure function of its arguments.  Evaluation uses the
upward three-term recurrence (k+1)P_{k+1} = (2k+1)xP_k - kP_{k-1}, which
is forward stable on [-1, 1] and reproduces P_n(+-1) = (+-1)^n exactly.
"""

import math

import numpy as np

from . import _kernels

__all__ = [
    "eval_legendre",
    "eval_legendre_sequence",
    "eval_legendre_derivative",
    "normalization_h",
    "bernstein_ratio",
    "bernstein_ratio_curve",
    "bernstein_ratio_degree_maxima",
]


def _check_degree(n):
    if n != int(n) or n < 0:
        raise ValueError(f"degree must be a nonnegative integer, got {n!r}")
    return int(n)


def eval_legendre(n, x):
    """P_n(x) for scalar x in [-1, 1]."""
    n = _check_degree(n)
    if not -1.0 <= x <= 1.0:
        raise ValueError(f"x must lie in [-1, 1], got {x!r}")
    return float(_kernels.sequence_at(float(x), n)[n])


def eval_legendre_sequence(n_max, x):
    """[P_0(x), ..., P_{n_max}(x)] in one recurrence pass."""
    n_max = _check_degree(n_max)
    if not -1.0 <= x <= 1.0:
        raise ValueError(f"x must lie in [-1, 1], got {x!r}")
    return _kernels.sequence_at(float(x), n_max)


def eval_legendre_derivative(n, x):
    """P_n'(x) for scalar x in the open interval (-1, 1).

    Uses (1-x^2)P_n'(x) = n(P_{n-1}(x) - xP_n(x)).  Endpoints are excluded:
    the Newton iteration this serves only ever sees interior points.
    """
    n = _check_degree(n)
    if not -1.0 < x < 1.0:
        raise ValueError(f"x must lie in (-1, 1), got {x!r}")
    if n == 0:
        return 0.0
    seq = _kernels.sequence_at(float(x), n)
    return float(n * (seq[n - 1] - x * seq[n]) / ((1.0 - x) * (1.0 + x)))


def normalization_h(n):
    """Orthogonality constant h_n = (n + 1/2)^-1 = integral of P_n^2."""
    n = _check_degree(n)
    return 1.0 / (n + 0.5)


def _quarter_root_weight(x):
    """(1-x^2)^{1/4}, via log1p to keep accuracy near the endpoints."""
    x = np.asarray(x, dtype=np.float64)
    one_minus_sq = 1.0 - x * x
    with np.errstate(divide="ignore"):
        w = np.where(one_minus_sq > 0.0, np.exp(0.25 * np.log1p(-x * x)), 0.0)
    return w


def bernstein_ratio(n, x):
    """(1-x^2)^{1/4}|P_n(x)| divided by its sharp bound sqrt(2/pi)(n+1/2)^{-1/2}.

    Always lies in [0, 1); exactly 0 at x = +-1.
    """
    n = _check_degree(n)
    if not -1.0 <= x <= 1.0:
        raise ValueError(f"x must lie in [-1, 1], got {x!r}")
    w = float(_quarter_root_weight(x))
    if w == 0.0:
        return 0.0
    scale = math.sqrt(0.5 * math.pi) * math.sqrt(n + 0.5)
    return w * abs(eval_legendre(n, x)) * scale


def bernstein_ratio_curve(n, xs):
    """The ratio of bernstein_ratio over a grid, one recurrence sweep."""
    n = _check_degree(n)
    xs = np.ascontiguousarray(xs, dtype=np.float64)
    if xs.size and (xs.min() < -1.0 or xs.max() > 1.0):
        raise ValueError("grid points must lie in [-1, 1]")
    w = _quarter_root_weight(xs)
    scale = math.sqrt(0.5 * math.pi) * math.sqrt(n + 0.5)
    return w * np.abs(_kernels.eval_at(n, xs)) * scale


def bernstein_ratio_degree_maxima(n_max, xs):
    """Grid maximum of the ratio for every degree n <= n_max.

    One sweep over the grid serves all degrees; used by the ratio study.
    """
    n_max = _check_degree(n_max)
    xs = np.ascontiguousarray(xs, dtype=np.float64)
    w = _quarter_root_weight(xs)
    raw = _kernels.degree_weighted_absmax(xs, w, n_max)
    n = np.arange(n_max + 1)
    return raw * np.sqrt(0.5 * np.pi) * np.sqrt(n + 0.5)
