"""Quantitative checks on constructed approximants.

Every claim the construction makes is measured here: the zeros sit on the
unit circle, the reflected polynomial never dominates its source on the
closed disk, the sup error on |z| = radius stays under the geometric bound,
the low-order Taylor coefficients of the error vanish, and the logarithmic
derivative really is the simple partial fraction over the computed roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np
from numpy.polynomial import polynomial as npp

from .construct import Approximant, FunctionSpec, error_bound
from .errors import InsufficientData, RootSolverFailed, ZeroDenominator
from .polynomials import (
    ComplexPolynomial,
    conjugate_reciprocal,
    derivative,
    roots_aberth,
)
from .series import log_derivative_series, subtract

#: residual level (relative to coefficient scale) accepted from the root
#: solver when its step criterion was not met, e.g. for multiple roots
ROOT_RESIDUAL_SLACK = 1e-8


def _polynomial_of(obj) -> ComplexPolynomial:
    return obj.polynomial if isinstance(obj, Approximant) else obj


def default_root_tolerance(degree: int) -> float:
    """Circle-deviation tolerance; relaxes with degree past 64 because
    clustered unimodular roots lose conditioning."""
    base = 1e-7
    return base * (1.0 + degree / 32.0) if degree > 64 else base


def _solved_roots(P: ComplexPolynomial):
    rs = roots_aberth(P)
    scale = max(1.0, float(np.max(np.abs(P.coeffs))))
    if not np.all(np.isfinite(rs.roots.view(np.float64))):
        raise RootSolverFailed("root iteration produced non-finite values")
    if not rs.converged and float(np.max(rs.residuals)) > ROOT_RESIDUAL_SLACK * scale:
        raise RootSolverFailed(
            f"root iteration stalled with residual {np.max(rs.residuals):.3e}"
        )
    return rs


def error_profile(appr: Approximant | ComplexPolynomial, f: FunctionSpec,
                  radius: float, samples: int):
    """Angles and |P'/P - f| over equispaced points of |z| = radius.

    P has all zeros on the unit circle, so the error is analytic on
    |z| <= radius < 1 and its sup over the subdisk is attained on this
    boundary circle (maximum-modulus principle); sampling the circle alone
    is therefore faithful.
    """
    P = _polynomial_of(appr)
    angles = 2.0 * np.pi * np.arange(samples) / samples
    z = radius * np.exp(1j * angles)
    logd = npp.polyval(z, derivative(P).coeffs) / npp.polyval(z, P.coeffs)
    return angles, np.abs(logd - f.evaluate(z))


def measure_sup_error(appr: Approximant | ComplexPolynomial, f: FunctionSpec,
                      radius: float, samples: int | None = None) -> float:
    """Measured sup of |P'/P - f| on the circle |z| = radius."""
    if samples is None:
        samples = max(4096, 8 * _polynomial_of(appr).degree)
    _, err = error_profile(appr, f, radius, samples)
    return float(np.max(err))


class RootCircleCheck(NamedTuple):
    max_deviation: float
    passed: bool
    roots: np.ndarray


def check_roots_on_circle(appr: Approximant | ComplexPolynomial,
                          tol: float) -> RootCircleCheck:
    """Largest | |root| - 1 | over all roots, and whether it is within tol."""
    rs = _solved_roots(_polynomial_of(appr))
    deviation = float(np.max(np.abs(np.abs(rs.roots) - 1.0)))
    return RootCircleCheck(deviation, deviation <= tol, rs.roots)


def _disk_grid(samples: int) -> np.ndarray:
    """Deterministic grid on |z| <= 1: sunflower interior + boundary ring."""
    boundary = max(8, samples // 8)
    interior = samples - boundary
    k = np.arange(1, interior + 1)
    golden = np.pi * (3.0 - np.sqrt(5.0))
    pts = np.sqrt(k / (interior + 1.0)) * np.exp(1j * golden * k)
    ring = np.exp(2j * np.pi * np.arange(boundary) / boundary)
    return np.concatenate([pts, ring])


def reflection_ratio_max(Q: ComplexPolynomial, shift_power: int,
                         samples: int) -> float:
    """Max over the closed disk of |z**m . Q*(z) / Q(z)|.

    For Q zero-free on the closed disk this ratio never exceeds 1 (each
    factor (1 - conj(r) z)/(z - r) of Q*/Q has modulus <= 1 inside), which
    is exactly why base + z**m . reflection cannot vanish off the circle.
    """
    grid = _disk_grid(samples)
    qv = npp.polyval(grid, Q.coeffs)
    if np.min(np.abs(qv)) == 0.0:
        raise ZeroDenominator("polynomial modulus underflowed on the sample grid")
    rv = npp.polyval(grid, conjugate_reciprocal(Q).coeffs)
    return float(np.max(np.abs(grid) ** shift_power * np.abs(rv) / np.abs(qv)))


class VanishingCheck(NamedTuple):
    ok: bool
    first_bad: int | None


def check_vanishing_order(appr: Approximant, f: FunctionSpec,
                          tol: float) -> VanishingCheck:
    """Taylor coefficients of P'/P - f must vanish through index cutoff - 2.

    The construction only perturbs g beyond its cutoff, so the error series
    starts at order cutoff - 1 in exact arithmetic; numerically we ask for
    |coefficient| <= tol . (1 + coeff_bound).
    """
    n = appr.cutoff
    if n < 2:
        return VanishingCheck(True, None)
    err = subtract(
        log_derivative_series(appr.polynomial, n - 2),
        f.taylor_coefficients(n - 2),
    )
    bad = np.nonzero(np.abs(err.coeffs) > tol * (1.0 + appr.coeff_bound))[0]
    if bad.size:
        return VanishingCheck(False, int(bad[0]))
    return VanishingCheck(True, None)


def simple_fraction_residual(appr: Approximant | ComplexPolynomial,
                             samples: int = 100) -> float:
    """Max of |sum_k 1/(z - root_k) - P'/P| on |z| = 0.5.

    Verifies that the approximant genuinely is a simple partial fraction
    with unit-circle poles: the identity is exact for the true roots, so
    the residual measures root quality.
    """
    P = _polynomial_of(appr)
    rs = _solved_roots(P)
    z = 0.5 * np.exp(2j * np.pi * np.arange(samples) / samples)
    frac = np.sum(1.0 / (z[:, None] - rs.roots[None, :]), axis=1)
    logd = npp.polyval(z, derivative(P).coeffs) / npp.polyval(z, P.coeffs)
    return float(np.max(np.abs(frac - logd)))


@dataclass(frozen=True)
class ErrorReport:
    """Measured quantities for one (function, degree) pair."""

    degree: int
    cutoff: int
    radius: float
    margin: float
    sup_error: float
    bound: float
    max_circle_deviation: float
    vanishing_order_ok: bool
    first_violated_index: int | None
    fraction_residual: float
    samples_used: int
    roots_converged: bool = True

    def __post_init__(self):
        if self.sup_error < 0 or self.max_circle_deviation < 0:
            raise ValueError("measured quantities must be non-negative")
        if self.bound <= 0:
            raise ValueError("the theoretical bound is strictly positive")


class RateFit(NamedTuple):
    slope: float
    intercept: float


def fit_rate(reports: Sequence[ErrorReport]) -> RateFit:
    """Least-squares slope of ln(sup_error) against the cutoff n.

    Geometric convergence at rate r shows up as slope ln(r).  A report with
    sup_error exactly 0 means the approximation is exact and the slope is
    reported as the -infinity sentinel.
    """
    cutoffs = np.array([r.cutoff for r in reports], dtype=float)
    errors = np.array([r.sup_error for r in reports], dtype=float)
    if np.unique(cutoffs).size < 3:
        raise InsufficientData("rate fitting needs >= 3 distinct cutoffs")
    if np.any(errors == 0.0):
        return RateFit(float("-inf"), float("nan"))
    slope, intercept = np.polyfit(cutoffs, np.log(errors), 1)
    return RateFit(float(slope), float(intercept))


def evaluate_report(appr: Approximant, f: FunctionSpec, radius: float,
                    margin: float, samples: int | None = None,
                    root_tol: float | None = None,
                    vanish_tol: float = 1e-8) -> ErrorReport:
    """Run every per-degree check and collect the results."""
    if samples is None:
        samples = max(4096, 8 * appr.degree)
    if root_tol is None:
        root_tol = default_root_tolerance(appr.degree)
    sup = measure_sup_error(appr, f, radius, samples)
    circle = check_roots_on_circle(appr, root_tol)
    vanish = check_vanishing_order(appr, f, vanish_tol)
    residual = simple_fraction_residual(appr)
    return ErrorReport(
        degree=appr.degree,
        cutoff=appr.cutoff,
        radius=radius,
        margin=margin,
        sup_error=sup,
        bound=error_bound(radius, margin, appr.cutoff),
        max_circle_deviation=circle.max_deviation,
        vanishing_order_ok=vanish.ok,
        first_violated_index=vanish.first_bad,
        fraction_residual=residual,
        samples_used=samples,
    )
