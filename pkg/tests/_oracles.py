"""Independent oracles shared by the test modules.

The Rodrigues oracle evaluates Legendre polynomials by n-fold symbolic
differentiation of (x^2 - 1)^n, with exact rational arithmetic at the
evaluation point, so it shares no code path with the recurrence kernels.
"""

from functools import lru_cache

import sympy

_x = sympy.Symbol("x")


@lru_cache(maxsize=None)
def rodrigues_expr(n):
    return sympy.expand(
        sympy.diff((_x**2 - 1) ** n, _x, n) / (2**n * sympy.factorial(n))
    )


def rodrigues_value(n, xv):
    """P_n(xv) computed exactly, rounded once at the end."""
    return float(rodrigues_expr(n).subs(_x, sympy.Rational(float(xv))))


def exact_piecewise_integral(pieces):
    """Sum of exact sympy integrals [(expr, lo, hi), ...], as a float."""
    total = sympy.Integer(0)
    for expr, lo, hi in pieces:
        total += sympy.integrate(expr, (_x, lo, hi))
    return float(total)


def symbol():
    return _x
