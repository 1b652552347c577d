#!/usr/bin/env python3
"""The quantitative certificates behind a construction.

Each approximant carries two scalar summaries of its auxiliary function g:
a boundary estimate of inf |g| and the coefficient ceiling max(1, |g_k|).
From those, closed-form bounds certify (a) the reflected factor never
dominates, (b) the truncation tail stays small, and (c) |P| stays away
from zero on the measurement disk -- which is what makes P'/P usable.
We also run the two structural identities the theory promises.
"""

import numpy as np

from cpolyapprox import (
    ComplexPolynomial,
    RationalFunction,
    certificate_bounds,
    check_vanishing_order,
    construct,
    evaluate,
    log_derivative_series,
    simple_fraction_residual,
)

f = RationalFunction(ComplexPolynomial([1.0]), ComplexPolynomial([1.0, -0.5]))
appr = construct(f, 16)
A, EPS = 0.5, 0.2

print(f"min_modulus (inf |g| estimate) : {appr.min_modulus:.6f}")
print(f"coeff_bound (max(1, |g_k|))    : {appr.coeff_bound:.6f}")

cb = certificate_bounds(appr, A, EPS)
print(f"\ncertificates on |z| <= {A} (margin eps = {EPS}):")
print(f"  sup |reflection|        < {cb.reflection_sup:.4f}")
print(f"  truncation tail of g    < {cb.tail_sup:.3e}")
print(f"  |P|                     > {cb.poly_lower:.4f}")
print(f"  sup |reflection'|       < {cb.reflection_derivative_sup:.4f}")
print(f"  tail derivative         < {cb.tail_derivative_sup:.3e}")

# The |P| lower bound is what certifies the logarithmic derivative: check
# it against a dense sample of the disk.
radii = np.linspace(0, A, 64)
angles = np.exp(2j * np.pi * np.arange(128) / 128)
grid = (radii[:, None] * angles[None, :]).ravel()
print(f"\nsampled min |P| on the disk    : "
      f"{np.min(np.abs(evaluate(appr.polynomial, grid))):.4f} "
      f"(certified > {cb.poly_lower:.4f})")

# Structural identity 1: the first n-1 Taylor coefficients of P'/P agree
# with those of f, so the approximation error vanishes to high order at 0.
check = check_vanishing_order(appr, f, 1e-10)
err_series = log_derivative_series(appr.polynomial, appr.cutoff).coeffs \
    - f.taylor_coefficients(appr.cutoff).coeffs
print(f"\nerror coefficients 0..{appr.cutoff}:")
print(" ", np.array2string(np.abs(err_series), precision=2))
print(f"vanishing through index n-2 = {appr.cutoff - 2}: {check.ok}")

# Structural identity 2: P'/P is exactly the sum of 1/(z - z_k) over the
# roots, i.e. a simple partial fraction with unit-circle poles.
print(f"partial-fraction residual      : "
      f"{simple_fraction_residual(appr):.2e}")
