"""Construction of circle-rooted approximants.

Given a bounded analytic function f on the unit disk, build a degree-N
polynomial P with every zero on the unit circle such that P'/P approximates
f on compact subdisks.  The recipe:

1. form g = exp of the antiderivative of f (so g'/g = f and g(0) = 1);
2. take the partial sum s of g's Taylor series up to n = N//2 and check it
   is zero-free on the closed disk;
3. reflect it, p = conjugate_reciprocal(s), and assemble P = s + z**m . p
   with m = N - deg s.

Because |p| <= |s| throughout the closed disk when s is zero-free there,
every zero of P lands on the circle, while the low-order Taylor
coefficients of P'/P still match those of f.
"""

from __future__ import annotations

import abc
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DenominatorVanishesInDisk,
    DomainError,
    EvaluationFailure,
    NotFoundWithin,
    OrderTooSmall,
    PartialSumNotZeroFree,
    SeriesUnreliable,
)
from .polynomials import (
    ComplexPolynomial,
    add,
    conjugate_reciprocal,
    is_zero_free_closed_disk,
    roots_aberth,
    shift,
)
from .series import TruncatedSeries, divide, exp_series, integrate

# Truncated coefficient data is trusted only well inside the disk; closed
# forms are evaluated wherever they are defined.
TRUSTED_SERIES_RADIUS = 0.95

# Boundary ring used for minimum-modulus estimates; chosen just inside the
# circle so closed-form kinds never sit on a singularity of their own data.
MIN_MODULUS_RADIUS = 1.0 - 1e-6

_GAUSS_NODES, _GAUSS_WEIGHTS = np.polynomial.legendre.leggauss(128)
_SEG_NODES = 0.5 * (_GAUSS_NODES + 1.0)   # quadrature nodes on [0, 1]
_SEG_WEIGHTS = 0.5 * _GAUSS_WEIGHTS


class FunctionSpec(abc.ABC):
    """An evaluable, Taylor-expandable description of the target function."""

    #: largest |z| at which evaluate() is trusted (inf for closed forms)
    trusted_radius: float = np.inf

    @abc.abstractmethod
    def taylor_coefficients(self, order: int) -> TruncatedSeries:
        """Taylor coefficients f_0..f_order about 0."""

    @abc.abstractmethod
    def evaluate(self, z):
        """Value of f at a point (or ndarray of points) inside the disk."""

    @abc.abstractmethod
    def primitive_at(self, z):
        """The antiderivative int_0^z f, needed for modulus estimates."""

    def _check_radius(self, z):
        # tiny absolute slack so that radius*exp(i theta) rounding never trips
        if np.max(np.abs(z)) > self.trusted_radius + 1e-12:
            raise EvaluationFailure(
                f"evaluation restricted to |z| <= {self.trusted_radius}"
            )


class ZeroFunction(FunctionSpec):
    """f identically 0."""

    def taylor_coefficients(self, order):
        return TruncatedSeries.zero(order)

    def evaluate(self, z):
        return np.zeros_like(np.asarray(z, dtype=np.complex128))

    def primitive_at(self, z):
        return np.zeros_like(np.asarray(z, dtype=np.complex128))

    def __repr__(self):
        return "ZeroFunction()"


@dataclass(frozen=True)
class ConstantFunction(FunctionSpec):
    """f identically equal to `value`."""

    value: complex

    def taylor_coefficients(self, order):
        c = np.zeros(order + 1, dtype=np.complex128)
        c[0] = self.value
        return TruncatedSeries(c)

    def evaluate(self, z):
        return np.full_like(np.asarray(z, dtype=np.complex128), self.value)

    def primitive_at(self, z):
        return self.value * np.asarray(z, dtype=np.complex128)


@dataclass(frozen=True)
class RationalFunction(FunctionSpec):
    """f = numerator/denominator with the denominator zero-free on |z| <= 1.

    Zero-freeness of the denominator is certified at construction time, so
    evaluation anywhere on the closed disk is safe.
    """

    numerator: ComplexPolynomial
    denominator: ComplexPolynomial

    def __post_init__(self):
        if not is_zero_free_closed_disk(self.denominator):
            raise DenominatorVanishesInDisk(
                "denominator has zeros in the closed unit disk"
            )

    def taylor_coefficients(self, order):
        num = TruncatedSeries(self.numerator.coeffs).pad(order)
        den = TruncatedSeries(self.denominator.coeffs).pad(order)
        return divide(num, den)

    def evaluate(self, z):
        return self.numerator(z) / self.denominator(z)

    def primitive_at(self, z):
        # Gauss-Legendre along the segment [0, z]; f is analytic on a
        # neighbourhood of the closed disk, so 128 nodes reach machine
        # precision for any denominator with reasonable margin.
        z = np.asarray(z, dtype=np.complex128)
        pts = _SEG_NODES[(...,) + (None,) * z.ndim] * z
        vals = self.evaluate(pts)
        return z * np.tensordot(_SEG_WEIGHTS, vals, axes=1)


@dataclass(frozen=True)
class TaylorFunction(FunctionSpec):
    """f known only through finitely many Taylor coefficients.

    Evaluation is allowed only for |z| <= TRUSTED_SERIES_RADIUS since the
    truncation tail is unknown; requesting more coefficients than stored
    raises OrderTooSmall.
    """

    series: TruncatedSeries
    trusted_radius: float = field(default=TRUSTED_SERIES_RADIUS, init=False)

    def taylor_coefficients(self, order):
        if order > self.series.order:
            raise OrderTooSmall(
                f"function data holds {self.series.order + 1} coefficients, "
                f"{order + 1} requested"
            )
        return self.series.truncate(order)

    def evaluate(self, z):
        self._check_radius(z)
        return self.series.evaluate(z)

    def primitive_at(self, z):
        self._check_radius(z)
        return integrate(self.series).evaluate(z)


@dataclass(frozen=True)
class Approximant:
    """Full record of one construction at a given degree.

    `polynomial` = `base` + z**shift_power . `reflection` has degree exactly
    `degree`, constant term 1, and all zeros on the unit circle.
    """

    degree: int                      # N, degree of the assembled polynomial
    cutoff: int                      # n = N//2, partial-sum cutoff
    base_degree: int                 # q = deg base (can be < n)
    shift_power: int                 # m = N - q, >= n >= 1
    base: ComplexPolynomial          # zero-free partial sum s
    reflection: ComplexPolynomial    # p = conjugate_reciprocal(s)
    polynomial: ComplexPolynomial    # P = s + z**m . p
    exp_primitive: TruncatedSeries   # coefficients of g = exp(int f)
    min_modulus: float               # boundary estimate of inf |g| (M0)
    coeff_bound: float               # max(1, |g_1|, ..., |g_n|) (M1)


def exp_primitive_series(f: FunctionSpec, order: int) -> TruncatedSeries:
    """Taylor coefficients of g = exp(int_0^z f), normalised to g(0) = 1."""
    if order == 0:
        return TruncatedSeries([1.0])
    return exp_series(integrate(f.taylor_coefficients(order - 1)))


def partial_sum(g: TruncatedSeries, n: int) -> ComplexPolynomial:
    """The polynomial g_0 + g_1 z + ... + g_n z**n."""
    if n > g.order:
        raise OrderTooSmall(f"series has order {g.order}, partial sum {n} requested")
    return ComplexPolynomial(g.coeffs[: n + 1])


def min_zero_free_cutoff(f: FunctionSpec, n_max: int) -> int:
    """Smallest n <= n_max whose partial sum of g is zero-free on |z| <= 1.

    Since g(0) = 1 the degenerate partial sum at n = 0 is the constant 1,
    so in practice this returns 0; it exists to probe particular cutoffs
    when diagnosing a failed construction.
    """
    if n_max < 0:
        raise DomainError("n_max must be >= 0")
    for n in range(n_max + 1):
        if is_zero_free_closed_disk(partial_sum(exp_primitive_series(f, n), n)):
            return n
    raise NotFoundWithin(n_max)


def construct(f: FunctionSpec, degree: int) -> Approximant:
    """Build the degree-`degree` circle-rooted approximant of f.

    Fails with PartialSumNotZeroFree (offending roots attached) when the
    partial sum at cutoff degree//2 has zeros in the closed disk; the caller
    should then increase the degree.  No silent degree adjustment happens
    here, so convergence measurements stay honest.
    """
    if degree < 2:
        raise DomainError("construction needs degree >= 2")
    cutoff = degree // 2
    series = exp_primitive_series(f, 2 * degree + 8)
    base = partial_sum(series, cutoff)
    if not is_zero_free_closed_disk(base):
        raise PartialSumNotZeroFree(
            f"partial sum at cutoff {cutoff} has zeros in the closed unit disk; "
            f"increase the degree",
            roots=roots_aberth(base).roots,
        )
    base_degree = base.degree
    shift_power = degree - base_degree
    reflection = conjugate_reciprocal(base)
    polynomial = add(base, shift(reflection, shift_power))
    coeff_bound = float(max(1.0, np.max(np.abs(series.coeffs[1 : cutoff + 1]))))
    min_modulus = estimate_min_modulus(
        f, radius=min(MIN_MODULUS_RADIUS, f.trusted_radius)
    )
    return Approximant(
        degree=degree,
        cutoff=cutoff,
        base_degree=base_degree,
        shift_power=shift_power,
        base=base,
        reflection=reflection,
        polynomial=polynomial,
        exp_primitive=series,
        min_modulus=min_modulus,
        coeff_bound=coeff_bound,
    )


def estimate_min_modulus(
    f: FunctionSpec,
    boundary_samples: int = 4096,
    radius: float = MIN_MODULUS_RADIUS,
) -> float:
    """Estimate inf |g| over the disk, g = exp(int f).

    g is analytic and never zero, so by the minimum-modulus principle its
    smallest modulus over |z| <= radius sits on the boundary ring; sampling
    that ring gives a faithful (not certified) estimate.  Function kinds
    backed by truncated data only support radii up to their trusted radius.
    """
    if radius > f.trusted_radius:
        raise SeriesUnreliable(
            f"modulus estimate at radius {radius} exceeds the trusted "
            f"radius {f.trusted_radius} of the coefficient data"
        )
    z = radius * np.exp(2j * np.pi * np.arange(boundary_samples) / boundary_samples)
    return float(np.min(np.exp(np.real(f.primitive_at(z)))))


def error_bound(radius: float, margin: float, cutoff: int) -> float:
    """The geometric error bound (radius+margin)**(cutoff+1) / (margin (1-radius-margin)).

    Valid for 0 < radius < 1, 0 < margin < 1 - radius, cutoff >= 1; decreasing
    in the cutoff and increasing in the radius.
    """
    if not 0.0 < radius < 1.0:
        raise DomainError(f"radius must lie in (0, 1), got {radius}")
    if not 0.0 < margin < 1.0 - radius:
        raise DomainError(f"margin must lie in (0, 1 - radius), got {margin}")
    if cutoff < 1:
        raise DomainError(f"cutoff must be >= 1, got {cutoff}")
    return (radius + margin) ** (cutoff + 1) / (margin * (1.0 - radius - margin))


@dataclass(frozen=True)
class CertificateBounds:
    """Diagnostic bounds certifying the construction on |z| <= radius.

    All quantities derive from the boundary-sampled min_modulus estimate and
    are therefore labelled estimates, not certified enclosures.
    """

    reflection_sup: float        # sup |p|  <= coeff_bound/(1-radius)
    tail_sup: float              # sup of the truncation tail of g
    poly_lower: float            # lower bound for |P|; positivity certifies P != 0
    reflection_derivative_sup: float
    tail_derivative_sup: float


def certificate_bounds(
    appr: Approximant, radius: float, margin: float
) -> CertificateBounds:
    """Evaluate the sup/lower bounds behind the error estimate on |z| <= radius."""
    if not 0.0 < radius < 1.0:
        raise DomainError(f"radius must lie in (0, 1), got {radius}")
    if not 0.0 < margin < 1.0 - radius:
        raise DomainError(f"margin must lie in (0, 1 - radius), got {margin}")
    a, eps = radius, margin
    m0, m1 = appr.min_modulus, appr.coeff_bound
    n, m = appr.cutoff, appr.shift_power
    denom = eps * (1.0 - a - eps)
    return CertificateBounds(
        reflection_sup=m1 / (1.0 - a),
        tail_sup=m0 * a ** (n + 1) / (1.0 - a),
        poly_lower=m0 - (m1 * a**m + m0 * a ** (n + 1)) / (1.0 - a),
        reflection_derivative_sup=m1 / denom,
        tail_derivative_sup=m0 * (a + eps) ** (n + 1) / denom,
    )
