#!/usr/bin/env python3
"""Geometric convergence of the approximation error.

On the disk |z| <= a the sup error of P'/P against f decays like
(a + eps)**(n+1) with n = N//2, for every margin eps in (0, 1-a).  We
measure the error across degrees, compare with the bound, and fit the
decay rate.  For f = 0 the error has the closed form N a**(N-1)/(1-a**N),
which the measurements reproduce to machine accuracy.
"""

import numpy as np

from cpolyapprox import (
    ComplexPolynomial,
    RationalFunction,
    ZeroFunction,
    construct,
    error_bound,
    fit_rate,
    measure_sup_error,
)
from cpolyapprox.verify import evaluate_report

A, EPS = 0.5, 0.2

print(f"== f = 0 on |z| <= {A}: measured vs closed form ==")
zero = ZeroFunction()
for N in (4, 8, 12, 16, 20):
    measured = measure_sup_error(construct(zero, N), zero, A)
    closed = N * A ** (N - 1) / (1 - A**N)
    print(f"  N={N:>2}: measured {measured:.9e}   closed form {closed:.9e}")

print(f"\n== f = 1/(1 - z/2) on |z| <= {A}: error vs bound ==")
ratio = RationalFunction(ComplexPolynomial([1.0]), ComplexPolynomial([1.0, -0.5]))
reports = []
print("   N    n    sup error      bound (eps=0.2)   ratio")
for N in range(8, 33, 4):
    appr = construct(ratio, N)
    rep = evaluate_report(appr, ratio, A, EPS)
    reports.append(rep)
    print(f"  {N:>2}  {rep.cutoff:>3}   {rep.sup_error:.3e}      "
          f"{rep.bound:.3e}       {rep.sup_error / rep.bound:.1e}")

fit = fit_rate(reports)
print(f"\nfitted slope of ln(error) vs n : {fit.slope:.4f}")
print(f"guaranteed rate  ln(a + eps)   : {np.log(A + EPS):.4f}")
print(f"typically achieved  ln(a)      : {np.log(A):.4f}")
print("\nthe fit beats the guaranteed geometric rate, as it should: the")
print("bound holds for every eps, while the construction usually decays")
print("at the sharper ln(a) rate with a small polynomial correction.")
