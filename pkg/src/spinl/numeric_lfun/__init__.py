"""Extended-precision numerical engine: special functions, tanh-sinh
quadrature, approximate-functional-equation L-evaluators, Rankin's
Petersson-norm formula, and the table verification harness.

Every entry point takes an explicit decimal precision D; there is no
global precision state.
"""

from .bigfloat import context, pi_value_numeric, round_to
from .evaluators import (
    LFunctionSpec,
    PeterssonNorm,
    delta_lfunction,
    functional_eq_residual,
    g20_lfunction,
    kernel_mellin_check,
    l_degree2,
    l_rankin4,
    petersson_norm,
    rankin_lfunction,
)
from .quadrature import QuadratureError, tanh_sinh
from .special import bessel_k, bickley_ki1, gamma_upper, incomplete_gamma_int
from .verify import (
    STORED_DELTA_NORM,
    STORED_G20_NORM,
    VerificationReport,
    VerificationRow,
    fresh_norms,
    stored_norms,
    verify_tables,
)

__all__ = [
    "context",
    "pi_value_numeric",
    "round_to",
    "LFunctionSpec",
    "PeterssonNorm",
    "delta_lfunction",
    "g20_lfunction",
    "rankin_lfunction",
    "l_degree2",
    "l_rankin4",
    "petersson_norm",
    "functional_eq_residual",
    "kernel_mellin_check",
    "QuadratureError",
    "tanh_sinh",
    "bessel_k",
    "bickley_ki1",
    "gamma_upper",
    "incomplete_gamma_int",
    "STORED_DELTA_NORM",
    "STORED_G20_NORM",
    "VerificationReport",
    "VerificationRow",
    "stored_norms",
    "fresh_norms",
    "verify_tables",
]
