"""Closed-form and numerical evaluation of semi-infinite integrals over
products of spherical Bessel functions, with exact angular coupling
coefficients and a quadrature oracle for cross-validation."""

from .angular import AngularTriple, WignerValue, triangle_check, wigner3j_zero, wigner6j
from .weberschafheitlin import (
    ClosedFormResult,
    MomentumPair,
    MomentumTriple,
    equal_k_inverse_power,
    equal_order_linear_weight,
    equal_order_no_weight,
    inverse_power_vs_j0,
    linear_weight_vs_j0,
    single_bessel_inverse_power,
    single_bessel_linear,
    sum_identity_check,
    triple_bessel,
    ws_inverse_power,
    ws_linear_power,
)
from .oracle import (
    QuadratureConfig,
    QuadratureReport,
    integrate_single_bessel,
    integrate_three_bessel,
    integrate_two_bessel,
)

__version__ = "0.1.0"

__all__ = [
    "AngularTriple",
    "WignerValue",
    "triangle_check",
    "wigner3j_zero",
    "wigner6j",
    "MomentumPair",
    "MomentumTriple",
    "ClosedFormResult",
    "triple_bessel",
    "ws_inverse_power",
    "ws_linear_power",
    "equal_order_no_weight",
    "inverse_power_vs_j0",
    "equal_k_inverse_power",
    "equal_order_linear_weight",
    "linear_weight_vs_j0",
    "single_bessel_inverse_power",
    "single_bessel_linear",
    "sum_identity_check",
    "QuadratureConfig",
    "QuadratureReport",
    "integrate_two_bessel",
    "integrate_three_bessel",
    "integrate_single_bessel",
    "__version__",
]
