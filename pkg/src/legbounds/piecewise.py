"""Piecewise-smooth functions on [-1, 1] and their weighted semi-norms.

A function is a list of breakpoints spanning [-1, 1] plus one evaluator
per piece; pieces expose exact derivatives (no numerical differencing).
The function itself must be continuous; derivatives may jump at interior
breakpoints, and those jumps enter the semi-norms as atomic terms:

    V_m     = integral of |f^(m+1)|(1-x^2)^{-1/4}  +  sum |jump of f^(m)| (1-x_j^2)^{-1/4}
    V_hat_m = the same with exponent 1/2.

The atomic-jump convention is what reproduces the worked constants for
the kink function |x - t| (V_1 = 2(1-t^2)^{-1/4}).
"""

import bisect
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Polynomial

from .quadrature import integrate_endpoint_singular

__all__ = [
    "PolynomialPiece",
    "CallablePiece",
    "PiecewiseSmoothFunction",
    "SmoothnessData",
    "make_abs_kink",
    "make_piecewise_polynomial",
    "make_smooth",
    "eval_derivative",
    "semi_norm_V",
    "semi_norm_V_hat",
    "smoothness_data",
    "abs_kink_smoothness",
    "smoothness_order",
]

_CONTINUITY_TOL = 1e-10


class PolynomialPiece:
    """A polynomial piece, given by ascending coefficients in the global x."""

    def __init__(self, coefficients):
        coefficients = np.atleast_1d(np.asarray(coefficients, dtype=np.float64))
        if coefficients.ndim != 1 or not np.all(np.isfinite(coefficients)):
            raise ValueError("coefficients must be a finite 1-d sequence")
        self.poly = Polynomial(coefficients)
        self._derivs = {0: self.poly}
        self.max_order = None  # any order is available

    def derivative_poly(self, k):
        if k not in self._derivs:
            self._derivs[k] = self.poly.deriv(k)
        return self._derivs[k]

    def value(self, k, x):
        return self.derivative_poly(k)(x)


class CallablePiece:
    """A piece given by explicit derivative evaluators [f, f', f'', ...].

    Evaluators may be scalar-only; array dispatch falls back to a loop.
    """

    def __init__(self, derivatives):
        self.derivatives = tuple(derivatives)
        if not self.derivatives:
            raise ValueError("need at least the order-0 evaluator")
        self.max_order = len(self.derivatives) - 1

    def value(self, k, x):
        if k > self.max_order:
            raise ValueError(f"derivative order {k} exceeds available order {self.max_order}")
        fn = self.derivatives[k]
        if np.ndim(x) == 0:
            return fn(x)
        try:
            out = np.asarray(fn(x), dtype=np.float64)
            if out.shape == np.shape(x):
                return out
        except (TypeError, ValueError):
            pass
        return np.array([float(fn(v)) for v in np.asarray(x)])


class PiecewiseSmoothFunction:
    """A continuous function on [-1, 1] with per-piece derivative evaluators."""

    def __init__(self, breakpoints, pieces):
        bp = tuple(float(b) for b in breakpoints)
        if len(bp) < 2 or bp[0] != -1.0 or bp[-1] != 1.0:
            raise ValueError("breakpoints must start at -1 and end at 1")
        if any(bp[j] >= bp[j + 1] for j in range(len(bp) - 1)):
            raise ValueError("breakpoints must be strictly increasing")
        pieces = tuple(pieces)
        if len(pieces) != len(bp) - 1:
            raise ValueError(f"expected {len(bp) - 1} pieces, got {len(pieces)}")
        self.breakpoints = bp
        self.pieces = pieces
        orders = [p.max_order for p in pieces]
        self.k_max = None if all(o is None for o in orders) else min(
            o for o in orders if o is not None
        )
        for j in range(1, len(bp) - 1):
            left = float(pieces[j - 1].value(0, bp[j]))
            right = float(pieces[j].value(0, bp[j]))
            scale = max(1.0, abs(left), abs(right))
            if abs(right - left) > _CONTINUITY_TOL * scale:
                raise ValueError(
                    f"function is discontinuous at breakpoint {bp[j]}: "
                    f"{left!r} vs {right!r}"
                )

    @property
    def interior_breakpoints(self):
        return self.breakpoints[1:-1]

    def _check_order(self, k):
        if k != int(k) or k < 0:
            raise ValueError(f"derivative order must be a nonnegative integer, got {k!r}")
        k = int(k)
        if self.k_max is not None and k > self.k_max:
            raise ValueError(f"derivative order {k} exceeds available order {self.k_max}")
        return k

    def piece_index(self, x):
        """Index of the piece containing x (right piece at a breakpoint)."""
        idx = bisect.bisect_right(self.breakpoints, x) - 1
        return min(max(idx, 0), len(self.pieces) - 1)

    def derivative_value(self, k, x):
        """f^(k)(x) at a scalar x in [-1, 1]."""
        k = self._check_order(k)
        if not -1.0 <= x <= 1.0:
            raise ValueError(f"x must lie in [-1, 1], got {x!r}")
        return float(self.pieces[self.piece_index(x)].value(k, x))

    def derivative_grid(self, k, xs):
        """f^(k) over an array, dispatching each point to its piece."""
        k = self._check_order(k)
        xs = np.asarray(xs, dtype=np.float64)
        idx = np.clip(np.searchsorted(self.breakpoints, xs, side="right") - 1,
                      0, len(self.pieces) - 1)
        out = np.empty_like(xs)
        for j, piece in enumerate(self.pieces):
            mask = idx == j
            if np.any(mask):
                out[mask] = piece.value(k, xs[mask])
        return out

    def __call__(self, x):
        if np.ndim(x) == 0:
            return self.derivative_value(0, float(x))
        return self.derivative_grid(0, x)

    def jump(self, k, x_j):
        """Jump f^(k)(x_j+) - f^(k)(x_j-) at an interior breakpoint."""
        k = self._check_order(k)
        try:
            j = self.breakpoints.index(x_j)
        except ValueError:
            raise ValueError(f"{x_j!r} is not a breakpoint") from None
        if j == 0 or j == len(self.breakpoints) - 1:
            raise ValueError("jumps are defined at interior breakpoints only")
        return float(self.pieces[j].value(k, x_j)) - float(self.pieces[j - 1].value(k, x_j))

    def is_piecewise_polynomial(self):
        return all(isinstance(p, PolynomialPiece) for p in self.pieces)


@dataclass(frozen=True)
class SmoothnessData:
    """Smoothness order m with the semi-norms the coefficient bounds consume."""

    m: int
    V: float
    V_hat: float | None = None
    provenance: str = "numeric"


def make_abs_kink(t):
    """The kink function |x - t| for t strictly inside (-1, 1)."""
    t = float(t)
    if not -1.0 < t < 1.0:
        raise ValueError(f"kink location must lie in (-1, 1), got {t!r}")
    return PiecewiseSmoothFunction(
        (-1.0, t, 1.0),
        (PolynomialPiece([t, -1.0]), PolynomialPiece([-t, 1.0])),
    )


def make_piecewise_polynomial(breakpoints, coefficient_lists):
    """A continuous piecewise polynomial from per-piece ascending coefficients."""
    return PiecewiseSmoothFunction(
        breakpoints, [PolynomialPiece(c) for c in coefficient_lists]
    )


def make_smooth(derivatives):
    """A single smooth piece on [-1, 1] from derivative evaluators [f, f', ...]."""
    return PiecewiseSmoothFunction((-1.0, 1.0), (CallablePiece(derivatives),))


def eval_derivative(f, k, x):
    """f^(k)(x); at a breakpoint the right piece wins."""
    if np.ndim(x) == 0:
        return f.derivative_value(k, float(x))
    return f.derivative_grid(k, x)


def _interior_sign_changes(piece, k, a, b):
    """Real roots of a polynomial piece's k-th derivative inside (a, b)."""
    poly = piece.derivative_poly(k)
    if poly.degree() < 1:
        return []
    margin = 1e-12 * (b - a)
    roots = []
    for r in poly.roots():
        if abs(r.imag) < 1e-10 and a + margin < r.real < b - margin:
            roots.append(float(r.real))
    return sorted(set(roots))


def _semi_norm(f, m, weight_exponent, tolerance):
    m = f._check_order(m)
    if f.k_max is not None and m + 1 > f.k_max:
        raise ValueError(f"semi-norm of order {m} needs derivatives up to {m + 1}")
    for k in range(1, m):
        for x_j in f.interior_breakpoints:
            if abs(f.jump(k, x_j)) > _CONTINUITY_TOL * max(1.0, abs(f.derivative_value(k, x_j))):
                raise ValueError(
                    f"derivative of order {k} jumps at {x_j}; "
                    f"orders below {m} must be absolutely continuous"
                )

    # Split polynomial pieces where f^(m+1) changes sign so |f^(m+1)| is
    # smooth on every integration piece.
    refined = list(f.breakpoints)
    for j, piece in enumerate(f.pieces):
        if isinstance(piece, PolynomialPiece):
            refined.extend(
                _interior_sign_changes(piece, m + 1, f.breakpoints[j], f.breakpoints[j + 1])
            )
    refined = sorted(set(refined))

    def integrand(x):
        return np.abs(f.derivative_grid(m + 1, x))

    ac = integrate_endpoint_singular(
        integrand, tolerance, breakpoints=refined, weight_exponent=weight_exponent
    )
    atomic = 0.0
    for x_j in f.interior_breakpoints:
        one_minus_sq = (1.0 - x_j) * (1.0 + x_j)
        atomic += abs(f.jump(m, x_j)) * one_minus_sq ** (-weight_exponent)
    return ac.value + atomic


def semi_norm_V(f, m, tolerance=1e-12):
    """V_m: weighted variation of f^(m) with the (1-x^2)^{-1/4} weight."""
    return _semi_norm(f, m, 0.25, tolerance)


def semi_norm_V_hat(f, m, tolerance=1e-12):
    """V_hat_m: the same construction with the (1-x^2)^{-1/2} weight."""
    return _semi_norm(f, m, 0.5, tolerance)


def smoothness_data(f, m, tolerance=1e-12):
    """Both semi-norms of order m, computed by quadrature."""
    return SmoothnessData(
        m=int(m),
        V=semi_norm_V(f, m, tolerance),
        V_hat=semi_norm_V_hat(f, m, tolerance),
        provenance="numeric",
    )


def abs_kink_smoothness(t):
    """Closed-form smoothness data of |x - t|: m = 1, V_1 = 2(1-t^2)^{-1/4}."""
    t = float(t)
    if not -1.0 < t < 1.0:
        raise ValueError(f"kink location must lie in (-1, 1), got {t!r}")
    one_minus_sq = (1.0 - t) * (1.0 + t)
    return SmoothnessData(
        m=1,
        V=2.0 * one_minus_sq**-0.25,
        V_hat=2.0 * one_minus_sq**-0.5,
        provenance="analytic",
    )


def smoothness_order(f, max_scan=16):
    """Smallest k >= 1 whose derivative jumps somewhere, or None if none found.

    For a piecewise polynomial None means the pieces join into one global
    polynomial (the expansion is then exact beyond its degree).
    """
    top = max_scan
    if f.is_piecewise_polynomial():
        top = max(p.poly.degree() for p in f.pieces) + 1
    elif f.k_max is not None:
        top = min(top, f.k_max)
    for k in range(1, top + 1):
        for x_j in f.interior_breakpoints:
            scale = max(1.0, abs(f.derivative_value(k, x_j)))
            if abs(f.jump(k, x_j)) > _CONTINUITY_TOL * scale:
                return k
    return None
