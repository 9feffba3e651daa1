"""Legendre coefficients, truncated series, and measured uniform error.

Coefficients a_n = (n + 1/2) * integral of f P_n come from piecewise Gauss
quadrature; for piecewise polynomials the rule size makes every integral
exact up to rounding.  For the kink function |x - t| there is also a
closed-form coefficient oracle derived from the antiderivative relation
(P_{n+1} - P_{n-1})' = (2n+1) P_n, which is what the bound comparisons
treat as ground truth.
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .piecewise import PiecewiseSmoothFunction
from .quadrature import ConvergenceError, gauss_legendre_rule

__all__ = [
    "LegendreSeries",
    "ErrorMeasurement",
    "compute_coefficients",
    "coefficients_abs_kink_oracle",
    "abs_kink_series",
    "evaluate_series",
    "measure_uniform_error",
    "truncation_sup_errors",
    "error_grid",
]

_ADAPTIVE_STAGNATION = 1e-12
_ADAPTIVE_MAX_DOUBLINGS = 6


@dataclass
class LegendreSeries:
    """A finite Legendre expansion: coefficients (a_0, ..., a_{N-1})."""

    coefficients: np.ndarray
    source: str = ""

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coefficients, dtype=np.float64))
        if c.ndim != 1 or c.size < 1:
            raise ValueError("coefficients must be a non-empty 1-d sequence")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must all be finite")
        self.coefficients = c

    @property
    def N(self):
        return self.coefficients.shape[0]

    def truncated(self, N):
        if not 1 <= N <= self.N:
            raise ValueError(f"truncation length must lie in [1, {self.N}], got {N!r}")
        return LegendreSeries(self.coefficients[:N].copy(), source=self.source)


@dataclass(frozen=True)
class ErrorMeasurement:
    sup_error: float
    grid_size: int
    argmax_location: float


def _piece_moments(piece, a, b, rule, n_max):
    """sum w f(x) P_n(x) over one piece for all n <= n_max."""
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    x = mid + half * rule.nodes
    fw = np.asarray(piece.value(0, x), dtype=np.float64) * rule.weights * half
    return _kernels.weighted_moments(x, fw, n_max)


def _coefficients_with_rule(f, N, K):
    rule = gauss_legendre_rule(K)
    moments = np.zeros(N)
    for j, piece in enumerate(f.pieces):
        moments += _piece_moments(piece, f.breakpoints[j], f.breakpoints[j + 1], rule, N - 1)
    return (np.arange(N) + 0.5) * moments


def compute_coefficients(f, N):
    """The first N Legendre coefficients of f by piecewise Gauss quadrature.

    Piecewise polynomials get a single exactness-sized rule; other pieces
    are handled by doubling the rule until the coefficients stagnate.
    """
    if N != int(N) or N < 1:
        raise ValueError(f"truncation length must be a positive integer, got {N!r}")
    N = int(N)
    if f.is_piecewise_polynomial():
        d = max(p.poly.degree() for p in f.pieces)
        K = (N + d + 1) // 2 + 8
        coeffs = _coefficients_with_rule(f, N, K)
        return LegendreSeries(coeffs, source=f"quadrature(K={K})")
    K = N + 32
    coeffs = _coefficients_with_rule(f, N, K)
    for _ in range(_ADAPTIVE_MAX_DOUBLINGS):
        K *= 2
        refined = _coefficients_with_rule(f, N, K)
        if np.max(np.abs(refined - coeffs)) <= _ADAPTIVE_STAGNATION:
            return LegendreSeries(refined, source=f"quadrature(K={K})")
        coeffs = refined
    raise ConvergenceError(
        f"coefficient quadrature did not stagnate below {_ADAPTIVE_STAGNATION} "
        f"after {_ADAPTIVE_MAX_DOUBLINGS} rule doublings (K={K})"
    )


def _check_kink_location(t):
    t = float(t)
    if not -1.0 < t < 1.0:
        raise ValueError(f"kink location must lie in (-1, 1), got {t!r}")
    return t


def coefficients_abs_kink_oracle(t, n):
    """Exact Legendre coefficient a_n of |x - t| for n >= 1.

    For n >= 2 this is (P_{n+2}(t) - P_n(t))/(2n+3) - (P_n(t) - P_{n-2}(t))/(2n-1);
    n = 1 comes from integrating the two linear pieces directly against x.
    """
    t = _check_kink_location(t)
    if n != int(n) or n < 1:
        raise ValueError(f"oracle degree must be an integer >= 1, got {n!r}")
    n = int(n)
    if n == 1:
        return 0.5 * t**3 - 1.5 * t
    p = _kernels.sequence_at(t, n + 2)
    return float((p[n + 2] - p[n]) / (2 * n + 3) - (p[n] - p[n - 2]) / (2 * n - 1))


def abs_kink_series(t, N):
    """The exact N-term Legendre series of |x - t| (a_0 = (1 + t^2)/2)."""
    t = _check_kink_location(t)
    if N != int(N) or N < 1:
        raise ValueError(f"truncation length must be a positive integer, got {N!r}")
    N = int(N)
    a = np.empty(N)
    a[0] = 0.5 * (1.0 + t * t)
    if N > 1:
        a[1] = 0.5 * t**3 - 1.5 * t
    if N > 2:
        p = _kernels.sequence_at(t, N + 1)
        n = np.arange(2, N)
        a[2:] = (p[n + 2] - p[n]) / (2 * n + 3) - (p[n] - p[n - 2]) / (2 * n - 1)
    return LegendreSeries(a, source=f"abs-kink oracle(t={t})")


def evaluate_series(series, x):
    """sum a_n P_n(x) in a single upward recurrence pass."""
    scalar = np.ndim(x) == 0
    xs = np.atleast_1d(np.asarray(x, dtype=np.float64))
    if xs.size and (xs.min() < -1.0 or xs.max() > 1.0):
        raise ValueError("evaluation points must lie in [-1, 1]")
    out = _kernels.series_eval(series.coefficients, np.ascontiguousarray(xs))
    return float(out[0]) if scalar else out


def error_grid(f, grid_size):
    """Chebyshev-distributed grid plus endpoints and the breakpoints of f.

    Chebyshev spacing is densest near +-1, where truncation error of
    kinked functions concentrates alongside the kink itself.
    """
    i = np.arange(grid_size)
    pts = np.cos((2 * i + 1) * np.pi / (2 * grid_size))
    extra = [-1.0, 1.0]
    if isinstance(f, PiecewiseSmoothFunction):
        extra.extend(f.breakpoints)
    return np.union1d(pts, np.asarray(extra))


def measure_uniform_error(f, series, grid_size=100_000):
    """Grid approximation of sup |f - f_N| over [-1, 1]."""
    if grid_size < 1000:
        raise ValueError(f"grid_size must be at least 1000, got {grid_size!r}")
    xs = error_grid(f, int(grid_size))
    diffs = np.abs(f(xs) - evaluate_series(series, xs))
    j = int(np.argmax(diffs))
    return ErrorMeasurement(
        sup_error=float(diffs[j]),
        grid_size=xs.size,
        argmax_location=float(xs[j]),
    )


def truncation_sup_errors(f, series, grid_size=100_000):
    """Measured sup error for every truncation N = 1..len(coefficients).

    One recurrence sweep over the grid; entry N-1 equals
    measure_uniform_error(f, series.truncated(N), grid_size).sup_error.
    """
    if grid_size < 1000:
        raise ValueError(f"grid_size must be at least 1000, got {grid_size!r}")
    xs = error_grid(f, int(grid_size))
    ref = np.asarray(f(xs), dtype=np.float64)
    return _kernels.running_sup_errors(series.coefficients, xs, ref)
