"""Circle-rooted polynomial approximation of analytic functions.

For a bounded analytic function f on the unit disk, this package constructs
degree-N polynomials whose zeros all lie on the unit circle and whose
logarithmic derivatives P'/P approximate f at a geometric rate on every
compact subdisk, and it measures every quantitative claim made along the
way (zeros on the circle, modulus domination of the reflected factor, the
error bound, vanishing order of the error, the partial-fraction identity).

The main entry points are `construct` (build an approximant), the checks in
`cpolyapprox.verify`, and the `cpolyapprox` command-line runner.
"""

from .construct import (
    Approximant,
    CertificateBounds,
    ConstantFunction,
    FunctionSpec,
    RationalFunction,
    TaylorFunction,
    ZeroFunction,
    certificate_bounds,
    construct,
    error_bound,
    estimate_min_modulus,
    exp_primitive_series,
    min_zero_free_cutoff,
    partial_sum,
)
from .errors import ApproximationError
from .polynomials import (
    ComplexPolynomial,
    RootSet,
    conjugate_reciprocal,
    count_zeros_in_disk,
    derivative,
    evaluate,
    is_zero_free_closed_disk,
    roots_aberth,
)
from .series import (
    TruncatedSeries,
    exp_series,
    integrate,
    log_derivative_series,
    multiply,
)
from .verify import (
    ErrorReport,
    check_roots_on_circle,
    check_vanishing_order,
    fit_rate,
    measure_sup_error,
    reflection_ratio_max,
    simple_fraction_residual,
)

__version__ = "0.1.0"

__all__ = [
    "Approximant",
    "ApproximationError",
    "CertificateBounds",
    "ComplexPolynomial",
    "ConstantFunction",
    "ErrorReport",
    "FunctionSpec",
    "RationalFunction",
    "RootSet",
    "TaylorFunction",
    "TruncatedSeries",
    "ZeroFunction",
    "certificate_bounds",
    "check_roots_on_circle",
    "check_vanishing_order",
    "conjugate_reciprocal",
    "construct",
    "count_zeros_in_disk",
    "derivative",
    "error_bound",
    "estimate_min_modulus",
    "evaluate",
    "exp_primitive_series",
    "exp_series",
    "fit_rate",
    "integrate",
    "is_zero_free_closed_disk",
    "log_derivative_series",
    "measure_sup_error",
    "min_zero_free_cutoff",
    "multiply",
    "partial_sum",
    "reflection_ratio_max",
    "roots_aberth",
    "simple_fraction_residual",
]
