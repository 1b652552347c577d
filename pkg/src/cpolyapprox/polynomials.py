"""Dense complex polynomials and the root machinery the verifier relies on.

Coefficients are stored constant-term first.  Trailing coefficients are
dropped only when they are exactly zero, so the reported degree always
matches the stored leading coefficient; there is no epsilon trimming.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import polynomial as npp

from .errors import Indeterminate, ZeroNearContour, ZeroPolynomial

# Contour margin and guard used when certifying zero-freeness of the closed
# unit disk: the winding count runs at radius 1 + CONTOUR_MARGIN, and the
# polynomial is rejected outright if its sampled modulus on |z| = 1 dips
# below MIN_MODULUS_GUARD times the sampled maximum.
CONTOUR_MARGIN = 1e-6
MIN_MODULUS_GUARD = 1e-9


@dataclass(frozen=True)
class ComplexPolynomial:
    """Coefficients a_0..a_q, low order first; the zero polynomial is [0]."""

    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self):
        c = np.atleast_1d(np.array(self.coeffs, dtype=np.complex128))
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coefficients must be a non-empty 1-d sequence")
        if not np.all(np.isfinite(c.real)) or not np.all(np.isfinite(c.imag)):
            raise ValueError("polynomial coefficients must be finite")
        last = c.size
        while last > 1 and c[last - 1] == 0:
            last -= 1
        c = c[:last].copy()
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def constant(cls, value) -> "ComplexPolynomial":
        return cls(np.array([value]))

    @property
    def degree(self) -> int:
        """Degree of the stored leading nonzero coefficient (0 for constants)."""
        return self.coeffs.size - 1

    @property
    def is_zero(self) -> bool:
        return self.coeffs.size == 1 and self.coeffs[0] == 0

    def __call__(self, z):
        return evaluate(self, z)

    def __repr__(self):
        return f"ComplexPolynomial({self.coeffs.tolist()!r})"


@dataclass(frozen=True)
class RootSet:
    """All-roots output of the simultaneous iteration.

    `roots` lists deg P approximations (multiplicity by repetition),
    `residuals` the values |P(root)|, and `converged` whether every update
    step fell below the step tolerance within the iteration budget.
    """

    roots: np.ndarray
    residuals: np.ndarray
    converged: bool
    iterations: int


def evaluate(P: ComplexPolynomial, z):
    """Horner evaluation at a scalar or ndarray of points."""
    return npp.polyval(z, P.coeffs)


def derivative(P: ComplexPolynomial) -> ComplexPolynomial:
    if P.degree == 0:
        return ComplexPolynomial.constant(0.0)
    return ComplexPolynomial(P.coeffs[1:] * np.arange(1, P.coeffs.size))


def add(P: ComplexPolynomial, Q: ComplexPolynomial) -> ComplexPolynomial:
    n = max(P.coeffs.size, Q.coeffs.size)
    out = np.zeros(n, dtype=np.complex128)
    out[: P.coeffs.size] += P.coeffs
    out[: Q.coeffs.size] += Q.coeffs
    return ComplexPolynomial(out)


def shift(P: ComplexPolynomial, power: int) -> ComplexPolynomial:
    """Multiply by z**power."""
    if power < 0:
        raise ValueError("shift power must be non-negative")
    if P.is_zero:
        return P
    return ComplexPolynomial(np.concatenate([np.zeros(power), P.coeffs]))


def from_roots(roots, leading=1.0) -> ComplexPolynomial:
    return ComplexPolynomial(leading * npp.polyfromroots(roots))


def conjugate_reciprocal(Q: ComplexPolynomial) -> ComplexPolynomial:
    """The reflected polynomial Q*(z) = z**q . conj(Q)(1/conj(z)).

    Coefficientwise this reverses the list and conjugates each entry.  On
    the unit circle |Q*| = |Q|, and the map is an involution whenever
    Q(0) != 0.
    """
    if Q.is_zero:
        raise ZeroPolynomial("conjugate reciprocal of the zero polynomial")
    return ComplexPolynomial(np.conj(Q.coeffs[::-1]))


def _cauchy_bound(coeffs: np.ndarray) -> float:
    lead = abs(coeffs[-1])
    return 1.0 + float(np.max(np.abs(coeffs[:-1]))) / lead


def roots_aberth(
    P: ComplexPolynomial, tol: float = 1e-13, max_iters: int = 200
) -> RootSet:
    """All roots at once via the Aberth-Ehrlich simultaneous iteration.

    Starts from deg P points on the circle of radius 0.8 max(1, Cauchy bound)
    with a fixed angular offset to break symmetry, then applies the corrected
    Newton step

        z_i <- z_i - w_i / (1 - w_i . sum_{j != i} 1/(z_i - z_j)),

    w_i = P(z_i)/P'(z_i), until every step is smaller than `tol`.  No
    deflation is performed; clustered roots keep full accuracy.  When the
    budget runs out the best iterate is returned with converged=False.
    """
    if P.degree < 1:
        raise ZeroPolynomial("root finding needs degree >= 1")
    coeffs = P.coeffs
    q = P.degree
    dcoeffs = derivative(P).coeffs

    radius = 0.8 * max(1.0, _cauchy_bound(coeffs))
    angles = 2.0 * np.pi * np.arange(q) / q + 0.4
    z = radius * np.exp(1j * angles)

    tiny = np.finfo(np.float64).tiny
    converged = False
    iterations = 0
    for iterations in range(1, max_iters + 1):
        pv = npp.polyval(z, coeffs)
        dv = npp.polyval(z, dcoeffs)
        dv = np.where(dv == 0, tiny, dv)
        w = pv / dv
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, np.inf)
        diff = np.where(diff == 0, tiny, diff)
        s = (1.0 / diff).sum(axis=1)
        denom = 1.0 - w * s
        denom = np.where(denom == 0, 1.0, denom)
        delta = w / denom
        z = z - delta
        if np.max(np.abs(delta)) < tol:
            converged = True
            break
    residuals = np.abs(npp.polyval(z, coeffs))
    return RootSet(roots=z, residuals=residuals, converged=converged,
                   iterations=iterations)


def count_zeros_in_disk(P: ComplexPolynomial, radius: float, samples: int) -> int:
    """Number of zeros with |z| < radius, by the argument principle.

    Accumulates the argument increments of P along `samples` equally spaced
    points of the circle and rounds the total winding to the nearest
    integer.  Raises ZeroNearContour when the sampled modulus dips low
    enough (or the winding total is far from an integer) that the count
    cannot be trusted.
    """
    if P.is_zero:
        raise ZeroPolynomial("zero counting needs a nonzero polynomial")
    theta = 2.0 * np.pi * np.arange(samples) / samples
    vals = npp.polyval(radius * np.exp(1j * theta), P.coeffs)
    mags = np.abs(vals)
    if np.min(mags) < MIN_MODULUS_GUARD * np.max(mags):
        raise ZeroNearContour(
            f"contour |z| = {radius} passes within guard band of a zero"
        )
    winding = np.sum(np.angle(np.roll(vals, -1) / vals)) / (2.0 * np.pi)
    count = int(np.rint(winding))
    if abs(winding - count) > 0.25:
        raise ZeroNearContour(
            f"winding total {winding:.6f} is not close to an integer"
        )
    return count


def is_zero_free_closed_disk(P: ComplexPolynomial, samples: int | None = None) -> bool:
    """Certify that P has no zeros with |z| <= 1.

    Certification runs the winding count on a contour slightly outside the
    unit circle (margin CONTOUR_MARGIN, with two fallback radii), after a
    direct minimum-modulus guard on |z| = 1 itself; a root that touches the
    circle therefore fails the certificate rather than slipping through.
    Raises Indeterminate when every probe contour is unreliable.
    """
    if P.is_zero:
        raise ZeroPolynomial("zero-freeness is undefined for the zero polynomial")
    if P.degree == 0:
        return True
    if samples is None:
        samples = max(8192, 64 * P.degree)

    theta = 2.0 * np.pi * np.arange(samples) / samples
    mags = np.abs(npp.polyval(np.exp(1j * theta), P.coeffs))
    if np.min(mags) < MIN_MODULUS_GUARD * np.max(mags):
        return False

    for margin in (CONTOUR_MARGIN, 4 * CONTOUR_MARGIN, 16 * CONTOUR_MARGIN):
        try:
            return count_zeros_in_disk(P, 1.0 + margin, samples) == 0
        except ZeroNearContour:
            continue
    raise Indeterminate("no reliable contour found just outside the unit circle")
