"""Backend agreement: the compiled kernels must match the numpy fallback."""

import os
import subprocess
import sys

import numpy as np
import numpy.testing as nptest
import pytest

from legbounds import _kernels_py

ck = pytest.importorskip("legbounds._ckernels")

rng = np.random.default_rng(42)
XS = rng.uniform(-1.0, 1.0, size=2003)
COEFFS = rng.standard_normal(120) / (1.0 + np.arange(120.0)) ** 1.5
REF = np.abs(XS)
WEIGHTS = (1.0 - XS * XS) ** 0.25


def test_sequence_at_bitwise():
    for x in (-1.0, -0.123456, 0.0, 0.77, 1.0):
        nptest.assert_array_equal(ck.sequence_at(x, 300), _kernels_py.sequence_at(x, 300))


@pytest.mark.parametrize("n", [0, 1, 2, 17, 200])
def test_eval_at_bitwise(n):
    nptest.assert_array_equal(ck.eval_at(n, XS), _kernels_py.eval_at(n, XS))


@pytest.mark.parametrize("n", [1, 2, 19, 150])
def test_eval_with_derivative_bitwise(n):
    inner = XS[np.abs(XS) < 0.999999]
    v1, d1 = ck.eval_with_derivative(n, inner)
    v2, d2 = _kernels_py.eval_with_derivative(n, inner)
    nptest.assert_array_equal(v1, v2)
    nptest.assert_array_equal(d1, d2)


def test_series_eval_bitwise():
    nptest.assert_array_equal(ck.series_eval(COEFFS, XS), _kernels_py.series_eval(COEFFS, XS))
    one = np.array([3.25])
    nptest.assert_array_equal(ck.series_eval(one, XS), _kernels_py.series_eval(one, XS))


def test_degree_weighted_absmax_bitwise():
    nptest.assert_array_equal(
        ck.degree_weighted_absmax(XS, WEIGHTS, 180),
        _kernels_py.degree_weighted_absmax(XS, WEIGHTS, 180),
    )


def test_running_sup_errors_bitwise():
    nptest.assert_array_equal(
        ck.running_sup_errors(COEFFS, XS, REF),
        _kernels_py.running_sup_errors(COEFFS, XS, REF),
    )


def test_weighted_moments_close():
    # accumulation order differs from numpy's pairwise dot: rounding only
    m1 = ck.weighted_moments(XS, REF, 90)
    m2 = _kernels_py.weighted_moments(XS, REF, 90)
    nptest.assert_allclose(m1, m2, rtol=1e-12, atol=1e-12)


def test_series_eval_matches_explicit_sum():
    explicit = sum(c * _kernels_py.eval_at(n, XS) for n, c in enumerate(COEFFS))
    nptest.assert_allclose(ck.series_eval(COEFFS, XS), explicit, rtol=0, atol=1e-13)


def test_running_sup_errors_matches_per_truncation():
    errs = ck.running_sup_errors(COEFFS, XS, REF)
    for N in (1, 2, 7, 120):
        direct = np.max(np.abs(REF - ck.series_eval(COEFFS[:N], XS)))
        assert errs[N - 1] == direct


def test_backend_env_override():
    code = "import legbounds; print(legbounds.kernel_backend)"
    env = dict(os.environ, LEGBOUNDS_BACKEND="python")
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True
    )
    assert out.stdout.strip() == "numpy"
