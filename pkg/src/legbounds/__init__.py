"""Legendre expansions of piecewise-smooth functions with sharp a-priori
coefficient and uniform-error bounds, plus guaranteed degree selection."""

from ._kernels import BACKEND as kernel_backend
from .bounds import (
    BoundParameters,
    BoundTable,
    abs_kink_bound_table,
    bound_B1,
    bound_B2,
    min_degree_for_tolerance,
    ratio_B1_B2,
    telescoping_tail,
    uniform_error_bound,
)
from .legendre import (
    bernstein_ratio,
    bernstein_ratio_curve,
    bernstein_ratio_degree_maxima,
    eval_legendre,
    eval_legendre_derivative,
    eval_legendre_sequence,
    normalization_h,
)
from .piecewise import (
    PiecewiseSmoothFunction,
    SmoothnessData,
    abs_kink_smoothness,
    eval_derivative,
    make_abs_kink,
    make_piecewise_polynomial,
    make_smooth,
    semi_norm_V,
    semi_norm_V_hat,
    smoothness_data,
    smoothness_order,
)
from .quadrature import (
    ConvergenceError,
    GaussRule,
    IntegrationResult,
    gauss_legendre_rule,
    integrate_endpoint_singular,
    integrate_piecewise,
    integrate_smooth,
)
from .series import (
    ErrorMeasurement,
    LegendreSeries,
    abs_kink_series,
    coefficients_abs_kink_oracle,
    compute_coefficients,
    evaluate_series,
    measure_uniform_error,
    truncation_sup_errors,
)

__version__ = "0.1.0"

__all__ = [
    "BoundParameters",
    "BoundTable",
    "ConvergenceError",
    "ErrorMeasurement",
    "GaussRule",
    "IntegrationResult",
    "LegendreSeries",
    "PiecewiseSmoothFunction",
    "SmoothnessData",
    "abs_kink_bound_table",
    "abs_kink_series",
    "abs_kink_smoothness",
    "bernstein_ratio",
    "bernstein_ratio_curve",
    "bernstein_ratio_degree_maxima",
    "bound_B1",
    "bound_B2",
    "coefficients_abs_kink_oracle",
    "compute_coefficients",
    "eval_derivative",
    "eval_legendre",
    "eval_legendre_derivative",
    "eval_legendre_sequence",
    "evaluate_series",
    "gauss_legendre_rule",
    "integrate_endpoint_singular",
    "integrate_piecewise",
    "integrate_smooth",
    "kernel_backend",
    "make_abs_kink",
    "make_piecewise_polynomial",
    "make_smooth",
    "measure_uniform_error",
    "min_degree_for_tolerance",
    "normalization_h",
    "ratio_B1_B2",
    "semi_norm_V",
    "semi_norm_V_hat",
    "smoothness_data",
    "smoothness_order",
    "telescoping_tail",
    "truncation_sup_errors",
    "uniform_error_bound",
    "__version__",
]
