"""Gauss-Legendre rules and integration of piecewise and weighted integrands.

Nodes come from Newton iteration on the three-term recurrence, seeded with
the classical cosine asymptotic guesses; no linear algebra involved.  The
endpoint-singular weights (1-x^2)^{-1/4} and (1-x^2)^{-1/2} are handled by
tanh-sinh (double-exponential) quadrature applied per smooth piece.
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels

__all__ = [
    "ConvergenceError",
    "GaussRule",
    "IntegrationResult",
    "gauss_legendre_rule",
    "integrate_smooth",
    "integrate_piecewise",
    "integrate_endpoint_singular",
]

_MAX_RULE_SIZE = 10_000
_NEWTON_TOL = 1e-15
_NEWTON_MAX_ITER = 100

_TS_TMAX = 5.0
_TS_MAX_LEVEL = 12


class ConvergenceError(RuntimeError):
    """An iterative scheme failed to reach its target accuracy."""


@dataclass(frozen=True)
class GaussRule:
    """A Gauss-Legendre rule on [-1, 1]: ascending nodes, positive weights."""

    nodes: np.ndarray
    weights: np.ndarray

    @property
    def size(self):
        return self.nodes.shape[0]


@dataclass(frozen=True)
class IntegrationResult:
    value: float
    estimated_error: float
    evaluations: int


def gauss_legendre_rule(K):
    """The K-point Gauss-Legendre rule, exact for polynomials of degree 2K-1.

    Nodes are the roots of P_K, found by Newton iteration on the positive
    half and mirrored, so the node set is exactly symmetric about 0.
    """
    if K != int(K) or not 1 <= K <= _MAX_RULE_SIZE:
        raise ValueError(f"rule size must be an integer in [1, {_MAX_RULE_SIZE}], got {K!r}")
    K = int(K)
    if K == 1:
        return GaussRule(np.array([0.0]), np.array([2.0]))

    m = K // 2
    i = np.arange(1, m + 1)
    z = np.cos(np.pi * (i - 0.25) / (K + 0.5))
    for _ in range(_NEWTON_MAX_ITER):
        vals, derivs = _kernels.eval_with_derivative(K, z)
        delta = vals / derivs
        z = z - delta
        if np.max(np.abs(delta)) <= _NEWTON_TOL:
            break
    else:
        raise ConvergenceError(
            f"Newton iteration for the {K}-point rule did not reach "
            f"{_NEWTON_TOL} in {_NEWTON_MAX_ITER} iterations"
        )
    _, derivs = _kernels.eval_with_derivative(K, z)
    w_half = 2.0 / ((1.0 - z) * (1.0 + z) * derivs**2)

    if K % 2:
        _, d0 = _kernels.eval_with_derivative(K, np.array([0.0]))
        nodes = np.concatenate([-z, [0.0], z[::-1]])
        weights = np.concatenate([w_half, 2.0 / d0**2, w_half[::-1]])
    else:
        nodes = np.concatenate([-z, z[::-1]])
        weights = np.concatenate([w_half, w_half[::-1]])
    return GaussRule(nodes, weights)


def _call_on_grid(f, x):
    """Evaluate f on an array, falling back to a scalar loop."""
    try:
        out = np.asarray(f(x), dtype=np.float64)
        if out.shape == x.shape:
            return out
    except (TypeError, ValueError):
        pass
    return np.array([float(f(xi)) for xi in x])


def integrate_smooth(rule, f, a, b):
    """Gauss integral of f over [a, b] by affine transplant of the rule."""
    if not (np.isfinite(a) and np.isfinite(b) and a < b):
        raise ValueError(f"need finite a < b, got a={a!r}, b={b!r}")
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    vals = _call_on_grid(f, mid + half * rule.nodes)
    return half * float(np.dot(rule.weights, vals))


def _check_breakpoints(breakpoints):
    bp = np.asarray(breakpoints, dtype=np.float64)
    if bp.ndim != 1 or bp.size < 2 or bp[0] != -1.0 or bp[-1] != 1.0 or np.any(np.diff(bp) <= 0):
        raise ValueError(
            "breakpoints must be strictly increasing, starting at -1 and ending at 1"
        )
    return bp


def integrate_piecewise(rule, f, breakpoints):
    """Sum of integrate_smooth over the consecutive sub-intervals of [-1, 1]."""
    bp = _check_breakpoints(breakpoints)
    return sum(integrate_smooth(rule, f, bp[j], bp[j + 1]) for j in range(bp.size - 1))


# tanh-sinh machinery: x = tanh(u), u = (pi/2) sinh(t), trapezoid in t.
# Per level, cache (1-y, 1+y, jacobian) in overflow-safe exponential form;
# the 1-/+y factors rebuild the singular weight without cancellation.
_ts_cache = {}


def _tanh_sinh_level(level):
    """New abscissa data introduced at a refinement level (level 0 = base grid)."""
    if level in _ts_cache:
        return _ts_cache[level]
    if level == 0:
        h = 1.0
        k = np.arange(-_TS_TMAX, _TS_TMAX + 0.5 * h, h)
    else:
        h = 0.5**level
        k = np.arange(-_TS_TMAX + h, _TS_TMAX, 2.0 * h)
    u = 0.5 * np.pi * np.sinh(k)
    au = np.abs(u)
    e = np.exp(-2.0 * au)  # exp(-2|u|)
    one_minus_ay = 2.0 * e / (1.0 + e)  # 1 - |tanh(u)|
    one_plus_ay = 2.0 / (1.0 + e)  # 1 + |tanh(u)|
    pos = u >= 0.0
    y = np.where(pos, one_plus_ay - 1.0, 1.0 - one_plus_ay)
    one_minus_y = np.where(pos, one_minus_ay, one_plus_ay)
    one_plus_y = np.where(pos, one_plus_ay, one_minus_ay)
    sech_u = 2.0 * np.exp(-au) / (1.0 + e)
    jac = 0.5 * np.pi * np.cosh(k) * sech_u**2
    data = (y, one_minus_y, one_plus_y, jac)
    _ts_cache[level] = data
    return data


def _weighted_piece_integral(g, a, b, beta, tol):
    """tanh-sinh integral of g(x)(1-x^2)^{-beta} over one smooth piece [a, b]."""
    c = 0.5 * (a + b)
    s = 0.5 * (b - a)
    touches_right = b == 1.0
    touches_left = a == -1.0

    def level_sum(level):
        y, omy, opy, jac = _tanh_sinh_level(level)
        x = c + s * y
        one_minus_x = s * omy if touches_right else (1.0 - c) - s * y
        one_plus_x = s * opy if touches_left else (1.0 + c) + s * y
        weight = (one_minus_x * one_plus_x) ** (-beta)
        gx = _call_on_grid(g, x)
        return float(np.sum(gx * weight * jac)) * s, x.size

    total, count = level_sum(0)
    value = total  # h = 1 at level 0
    prev = value
    err = np.inf
    for level in range(1, _TS_MAX_LEVEL + 1):
        part, n_new = level_sum(level)
        count += n_new
        value = 0.5 * value + 0.5**level * part
        err = abs(value - prev)
        if level >= 2 and err <= tol:
            return value, err, count
        prev = value
    raise ConvergenceError(
        f"tanh-sinh quadrature did not reach tolerance {tol} on [{a}, {b}] "
        f"(last refinement changed the value by {err:.3e})"
    )


def integrate_endpoint_singular(g, tolerance, *, breakpoints=(-1.0, 1.0), weight_exponent=0.25):
    """Integral of g(x)(1-x^2)^{-weight_exponent} over [-1, 1].

    g must be bounded on (-1, 1); discontinuities of g must be listed in
    breakpoints so each piece is smooth.  The default exponent 1/4 is the
    weight of the coefficient-bound semi-norm; 1/2 serves the hat variant.
    """
    if not tolerance >= 1e-13:
        raise ValueError(f"tolerance must be at least 1e-13, got {tolerance!r}")
    bp = _check_breakpoints(breakpoints)
    n_pieces = bp.size - 1
    tol_piece = tolerance / n_pieces
    value = 0.0
    err = 0.0
    count = 0
    for j in range(n_pieces):
        v, e, c = _weighted_piece_integral(g, bp[j], bp[j + 1], weight_exponent, tol_piece)
        value += v
        err += e
        count += c
    return IntegrationResult(value, err, count)
