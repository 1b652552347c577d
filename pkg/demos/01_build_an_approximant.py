#!/usr/bin/env python3
"""Walk through one construction, piece by piece.

Target: f(z) = 1/(1 - z/2), a bounded analytic function on the unit disk.
We build a degree-12 polynomial P whose zeros all sit on the unit circle
and whose logarithmic derivative P'/P approximates f inside the disk.
"""

import numpy as np

from cpolyapprox import (
    ComplexPolynomial,
    RationalFunction,
    construct,
    derivative,
    evaluate,
    exp_primitive_series,
)

f = RationalFunction(ComplexPolynomial([1.0]), ComplexPolynomial([1.0, -0.5]))

# Step 1: the auxiliary function g = exp(int_0^z f) whose log-derivative is
# f itself.  Here g = (1 - z/2)**-2, so its coefficients are (k+1)/2**k.
g = exp_primitive_series(f, 12)
print("g coefficients:", np.round(g.coeffs.real, 6))

# Step 2-3: construct() takes the partial sum of g at cutoff N//2, checks it
# is zero-free on the closed disk, reflects it, and assembles P.
appr = construct(f, 12)
print(f"\ndegree N = {appr.degree}, cutoff n = {appr.cutoff}, "
      f"base degree q = {appr.base_degree}, shift m = {appr.shift_power}")
print("base s      :", np.round(appr.base.coeffs.real, 6))
print("reflection p:", np.round(appr.reflection.coeffs.real, 6))
print("P = s + z^m p:", np.round(appr.polynomial.coeffs.real, 6))

# The coefficient list of P reads the same forwards and backwards (after
# conjugation): P is self-inversive, the signature of circle-rooted
# polynomials built this way.
print("self-inversive:",
      np.array_equal(appr.polynomial.coeffs,
                     np.conj(appr.polynomial.coeffs[::-1])))

# How good is P'/P as a stand-in for f?
print("\n    z            P'(z)/P(z)              f(z)")
for z in (0.0, 0.3, 0.25 + 0.25j, -0.5j):
    P, dP = appr.polynomial, derivative(appr.polynomial)
    approx = evaluate(dP, z) / evaluate(P, z)
    exact = f.evaluate(z)
    print(f"  {z!s:>9}   {approx:.10f}   {exact:.10f}")

print("\nestimated inf |g| over the disk:", appr.min_modulus,
      "(exact value 4/9 =", 4 / 9, ")")
