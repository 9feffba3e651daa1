"""Gauss rules, piecewise integration, and the singular-weight integrator."""

import math

import numpy as np
import numpy.testing as nptest
import pytest
import sympy
from numpy.polynomial.legendre import leggauss
from scipy.special import gamma

from legbounds import _kernels, legendre
from legbounds.quadrature import (
    ConvergenceError,
    gauss_legendre_rule,
    integrate_endpoint_singular,
    integrate_piecewise,
    integrate_smooth,
)

from _oracles import exact_piecewise_integral, symbol


class TestGaussRule:
    def test_one_point(self):
        rule = gauss_legendre_rule(1)
        nptest.assert_array_equal(rule.nodes, [0.0])
        nptest.assert_array_equal(rule.weights, [2.0])

    def test_two_point(self):
        # exactness on 1, x, x^2, x^3 pins nodes +-1/sqrt(3), weights 1
        rule = gauss_legendre_rule(2)
        nptest.assert_allclose(rule.nodes, [-1.0 / math.sqrt(3.0), 1.0 / math.sqrt(3.0)],
                               rtol=0, atol=1e-15)
        nptest.assert_allclose(rule.weights, [1.0, 1.0], rtol=0, atol=1e-15)

    def test_five_point_on_x8(self):
        rule = gauss_legendre_rule(5)
        val = integrate_smooth(rule, lambda x: x**8, -1.0, 1.0)
        assert abs(val - 2.0 / 9.0) <= 1e-14

    @pytest.mark.parametrize("K", list(range(1, 41)))
    def test_monomial_exactness(self, K):
        rule = gauss_legendre_rule(K)
        for j in range(2 * K):
            approx = float(np.dot(rule.weights, rule.nodes**j))
            if j % 2:
                assert abs(approx) <= 1e-14
            else:
                exact = 2.0 / (j + 1)
                assert abs(approx - exact) <= 1e-12 * exact

    @pytest.mark.parametrize("K", [2, 3, 7, 20, 51, 400])
    def test_structure_invariants(self, K):
        rule = gauss_legendre_rule(K)
        assert rule.size == K
        assert np.all(np.diff(rule.nodes) > 0)
        assert np.all(rule.weights > 0)
        nptest.assert_allclose(rule.nodes, -rule.nodes[::-1], rtol=0, atol=1e-14)
        assert abs(rule.weights.sum() - 2.0) <= 1e-13

    @pytest.mark.parametrize("K", [3, 7, 64, 501])
    def test_matches_numpy_leggauss(self, K):
        # absolute weight tolerance: leggauss itself is ~1e-9 relative off
        # on the tiny endpoint weights at large K (checked against mpmath)
        rule = gauss_legendre_rule(K)
        x_ref, w_ref = leggauss(K)
        nptest.assert_allclose(rule.nodes, x_ref, rtol=0, atol=1e-14)
        nptest.assert_allclose(rule.weights, w_ref, rtol=0, atol=1e-13)

    def test_large_rule_builds(self):
        rule = gauss_legendre_rule(10_000)
        assert abs(rule.weights.sum() - 2.0) <= 1e-13

    def test_size_domain(self):
        with pytest.raises(ValueError):
            gauss_legendre_rule(0)
        with pytest.raises(ValueError):
            gauss_legendre_rule(10_001)

    def test_orthogonality_reproduction(self):
        rule = gauss_legendre_rule(40)
        table = [_kernels.eval_at(n, rule.nodes) for n in range(31)]
        for n in range(31):
            for m in range(n, 31):
                val = float(np.dot(rule.weights, table[n] * table[m]))
                expected = legendre.normalization_h(n) if n == m else 0.0
                assert abs(val - expected) <= 1e-12


class TestIntegrateSmooth:
    def test_exactness_degree_three(self):
        rule = gauss_legendre_rule(2)
        assert abs(integrate_smooth(rule, lambda x: x**2, -1.0, 1.0) - 2.0 / 3.0) <= 1e-15

    def test_exponential(self):
        rule = gauss_legendre_rule(20)
        assert abs(integrate_smooth(rule, np.exp, 0.0, 1.0) - (math.e - 1.0)) <= 1e-14

    def test_zero_function(self):
        rule = gauss_legendre_rule(4)
        assert integrate_smooth(rule, lambda x: 0.0 * x, -1.0, 1.0) == 0.0

    def test_scalar_only_callable(self):
        rule = gauss_legendre_rule(12)
        val = integrate_smooth(rule, lambda x: math.sin(x), 0.0, math.pi)
        assert abs(val - 2.0) <= 1e-14

    def test_bad_interval(self):
        rule = gauss_legendre_rule(2)
        with pytest.raises(ValueError):
            integrate_smooth(rule, np.exp, 1.0, 0.0)


class TestIntegratePiecewise:
    def test_abs(self):
        rule = gauss_legendre_rule(3)
        assert abs(integrate_piecewise(rule, np.abs, [-1.0, 0.0, 1.0]) - 1.0) <= 1e-15

    def test_constant(self):
        rule = gauss_legendre_rule(2)
        assert abs(integrate_piecewise(rule, lambda x: np.ones_like(x),
                                       [-1.0, -0.3, 0.8, 1.0]) - 2.0) <= 1e-15

    def test_kinked_cubic_against_sympy(self):
        x = symbol()
        half = sympy.Rational(1, 2)
        p2 = (3 * x**2 - 1) / 2
        exact = exact_piecewise_integral([
            ((half - x) * p2, -1, half),
            ((x - half) * p2, half, 1),
        ])
        rule = gauss_legendre_rule(4)
        val = integrate_piecewise(
            rule,
            lambda v: np.abs(v - 0.5) * (3.0 * v**2 - 1.0) / 2.0,
            [-1.0, 0.5, 1.0],
        )
        assert abs(val - exact) <= 1e-14

    def test_malformed_breakpoints(self):
        rule = gauss_legendre_rule(2)
        for bad in ([0.0, 1.0], [-1.0, 0.5], [-1.0, 0.3, 0.3, 1.0], [1.0, -1.0]):
            with pytest.raises(ValueError):
                integrate_piecewise(rule, np.abs, bad)


class TestEndpointSingular:
    def test_constant_weight_integral(self):
        # integral of (1-x^2)^{-1/4} = Beta(3/4, 1/2) = sqrt(pi)Gamma(3/4)/Gamma(5/4)
        exact = math.sqrt(math.pi) * gamma(0.75) / gamma(1.25)
        res = integrate_endpoint_singular(lambda x: np.ones_like(x), 1e-12)
        assert abs(res.value - exact) <= 1e-12
        assert res.estimated_error <= 1e-12
        assert res.evaluations > 0

    def test_odd_integrand(self):
        res = integrate_endpoint_singular(lambda x: x, 1e-12)
        assert abs(res.value) <= 1e-12

    def test_piece_additivity(self):
        exact = math.sqrt(math.pi) * gamma(0.75) / gamma(1.25)
        res = integrate_endpoint_singular(
            lambda x: np.abs(np.sign(x)), 1e-12, breakpoints=[-1.0, 0.0, 1.0]
        )
        assert abs(res.value - exact) <= 1e-12

    def test_half_weight_exponent(self):
        # integral of (1-x^2)^{-1/2} = pi
        res = integrate_endpoint_singular(
            lambda x: np.ones_like(x), 1e-12, weight_exponent=0.5
        )
        assert abs(res.value - math.pi) <= 1e-11

    def test_tolerance_precondition(self):
        with pytest.raises(ValueError):
            integrate_endpoint_singular(lambda x: x, 1e-14)

    @pytest.mark.parametrize("n", [0, 3, 6])
    def test_against_cos_substitution_trapezoid(self, n):
        # x = cos(theta) turns the weighted moment into a plain integral of
        # P_n(cos t) sqrt(sin t) over [0, pi]; 1e6-panel trapezoid oracle
        theta = np.linspace(0.0, np.pi, 1_000_001)
        integrand = _kernels.eval_at(n, np.cos(theta)) * np.sqrt(np.sin(theta))
        brute = float(np.trapezoid(integrand, theta))
        res = integrate_endpoint_singular(
            lambda x: _kernels.eval_at(n, np.asarray(x)), 1e-12
        )
        assert abs(res.value - brute) <= 1e-8

    def test_nonintegrable_integrand_raises(self):
        # violates the boundedness precondition: blows up too fast at 1
        with np.errstate(all="ignore"), pytest.raises(ConvergenceError):
            integrate_endpoint_singular(lambda x: (1.0 - x) ** -0.9, 1e-13)
