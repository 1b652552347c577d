"""Acceptance gate: every headline claim, at its stated tolerance.

Each criterion prints one PASS/FAIL line (run with `pytest -s` to see them
all).  The criteria are deliberately independent of the library's own code
paths wherever a closed form exists.
"""

import time

import numpy as np
import pytest

from cpolyapprox.construct import construct, error_bound, exp_primitive_series
from cpolyapprox.polynomials import (
    ComplexPolynomial,
    conjugate_reciprocal,
    evaluate,
    from_roots,
)
from cpolyapprox.verify import (
    check_roots_on_circle,
    check_vanishing_order,
    evaluate_report,
    fit_rate,
    measure_sup_error,
    reflection_ratio_max,
    simple_fraction_residual,
)
from conftest import CATALOG, cached_construct

_MODULE_START = time.perf_counter()

CATALOG_NAMES = ("zero", "const1", "ratio")


def _report(num, description, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    print(f"[{status}] criterion {num}: {description}"
          + (f" ({detail})" if detail else ""))
    assert ok, f"criterion {num} failed: {description} {detail}"


def test_criterion_1_exact_case_closed_form():
    failures = []
    for a in (0.3, 0.5, 0.8):
        for N in (4, 8, 20):
            t0 = time.perf_counter()
            appr = construct(CATALOG["zero"], N)
            samples = max(4096, 8 * N)
            measured = measure_sup_error(appr, CATALOG["zero"], a, samples)
            elapsed = time.perf_counter() - t0
            closed = N * a ** (N - 1) / (1 - a**N)
            rel = abs(measured - closed) / closed
            if rel > 1e-6:
                failures.append(f"a={a} N={N} rel={rel:.2e}")
            if elapsed > 1.0:
                failures.append(f"a={a} N={N} took {elapsed:.2f}s")
    spot = measure_sup_error(cached_construct("zero", 20), CATALOG["zero"], 0.5)
    detail = ("; ".join(failures) if failures
              else f"a=0.5, N=20 measured {spot:.6e}")
    _report(1, "f = 0 sup error matches N a**(N-1)/(1-a**N) to 1e-6 rel",
            not failures, detail)


def test_criterion_2_roots_on_circle():
    failures = []
    for name in CATALOG_NAMES:
        for N in (8, 12, 16, 24, 32, 64):
            check = check_roots_on_circle(cached_construct(name, N), 1e-7)
            if not check.passed:
                failures.append(f"{name} N={N} dev={check.max_deviation:.2e}")
    # negative control: a 1e-2 coefficient perturbation must break the check
    c = cached_construct("ratio", 16).polynomial.coeffs.copy()
    c[5] += 1e-2
    control = check_roots_on_circle(ComplexPolynomial(c), 1e-7)
    if control.passed:
        failures.append("negative control not detected")
    _report(2, "all roots within 1e-7 of the unit circle, catalog x N<=64",
            not failures, "; ".join(failures))


def test_criterion_3_error_bound_compliance():
    failures = []
    for name in CATALOG_NAMES:
        errors = []
        for N in (16, 24, 32, 40):
            appr = cached_construct(name, N)
            sup = measure_sup_error(appr, CATALOG[name], 0.5)
            bound = error_bound(0.5, 0.2, appr.cutoff)
            errors.append(sup)
            if sup > 2.0 * bound:
                failures.append(f"{name} N={N} sup={sup:.3e} > 2x{bound:.3e}")
        if not all(x > y for x, y in zip(errors, errors[1:])):
            failures.append(f"{name} errors not strictly decreasing: {errors}")
    _report(3, "sup error <= 2 (a+eps)**(n+1)/(eps(1-a-eps)) and decreasing",
            not failures, "; ".join(failures))


def test_criterion_4_modulus_domination():
    rng = np.random.default_rng(20260810)
    radii = np.linspace(0.0, 1.0, 32)
    angles = np.exp(2j * np.pi * np.arange(64) / 64)
    grid = (radii[:, None] * angles[None, :]).ravel()   # 2048 disk points
    worst_dom = 0.0
    worst_ratio = 0.0
    for _ in range(100):
        deg = int(rng.integers(1, 11))
        roots = (1.0 + 2.0 * rng.random(deg)) * \
            np.exp(2j * np.pi * rng.random(deg))
        lead = rng.standard_normal() + 1j * rng.standard_normal()
        Q = from_roots(roots, leading=lead if lead != 0 else 1.0)
        qv = np.abs(evaluate(Q, grid))
        rv = np.abs(evaluate(conjugate_reciprocal(Q), grid))
        worst_dom = max(worst_dom, float(np.max(rv / qv)))
        for m in (0, 1, 5):
            worst_ratio = max(worst_ratio, reflection_ratio_max(Q, m, 2048))
    ok = worst_dom <= 1 + 1e-12 and worst_ratio <= 1 + 1e-10
    _report(4, "|Q*| <= |Q| on the closed disk and |z**m Q*/Q| <= 1",
            ok, f"worst |Q*|/|Q| - 1 = {worst_dom - 1:.2e}, "
                f"worst ratio - 1 = {worst_ratio - 1:.2e}")


def test_criterion_5_vanishing_order():
    failures = []
    for name in CATALOG_NAMES:
        for N in (8, 16, 32):
            appr = cached_construct(name, N)
            check = check_vanishing_order(appr, CATALOG[name], 1e-8)
            if not check.ok:
                failures.append(f"{name} N={N} first_bad={check.first_bad}")
    _report(5, "Taylor coefficients of P'/P - f vanish through index n-2",
            not failures, "; ".join(failures))


def test_criterion_6_series_oracles():
    factorials = np.ones(31)
    for k in range(1, 31):
        factorials[k] = factorials[k - 1] * k
    exp_coeffs = exp_primitive_series(CATALOG["const1"], 30).coeffs
    rel_exp = np.max(np.abs(exp_coeffs - 1 / factorials) * factorials)
    square = np.array([(k + 1) / 2.0**k for k in range(31)])
    sq_coeffs = exp_primitive_series(CATALOG["ratio"], 30).coeffs
    rel_sq = np.max(np.abs(sq_coeffs - square) / square)
    ok = rel_exp < 1e-12 and rel_sq < 1e-12
    _report(6, "series engine reproduces 1/k! and (k+1)/2**k for k <= 30",
            ok, f"rel errors {rel_exp:.2e}, {rel_sq:.2e}")


def test_criterion_7_simple_fraction_identity():
    failures = []
    for name in CATALOG_NAMES:
        residual = simple_fraction_residual(cached_construct(name, 16),
                                            samples=100)
        if residual > 1e-8:
            failures.append(f"{name} residual={residual:.2e}")
    _report(7, "sum 1/(z - z_k) matches P'/P to 1e-8 on |z| = 0.5, N = 16",
            not failures, "; ".join(failures))


def test_criterion_8_rate_fit_and_runtime():
    reports = []
    for N in range(8, 33, 4):
        appr = cached_construct("ratio", N)
        reports.append(evaluate_report(appr, CATALOG["ratio"], 0.5, 0.2))
    fit = fit_rate(reports)
    limit = np.log(0.7) + 0.05
    elapsed = time.perf_counter() - _MODULE_START
    ok = fit.slope <= limit and elapsed < 30.0
    _report(8, "fitted ln-error slope within the geometric-rate budget",
            ok, f"slope={fit.slope:.4f} <= {limit:.4f}, "
                f"acceptance module elapsed {elapsed:.1f}s < 30s")
