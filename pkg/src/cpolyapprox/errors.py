"""Exception types shared across the library."""


class ApproximationError(Exception):
    """Base class for every failure this library raises on purpose."""


class NonzeroConstantTerm(ApproximationError):
    """Series exponential requires a vanishing constant term."""


class ZeroConstantTerm(ApproximationError):
    """Logarithmic-derivative expansion requires P(0) != 0."""


class ZeroPolynomial(ApproximationError):
    """Operation is undefined for the identically-zero polynomial."""


class ZeroNearContour(ApproximationError):
    """A sampled contour passes too close to a zero; winding count unreliable."""


class Indeterminate(ApproximationError):
    """Zero-freeness could not be certified at any of the probe radii."""


class OrderTooSmall(ApproximationError):
    """More series coefficients were requested than are available."""


class NotFoundWithin(ApproximationError):
    """No zero-free partial sum was found up to the given cutoff."""

    def __init__(self, n_max: int):
        super().__init__(f"no zero-free partial sum found for n <= {n_max}")
        self.n_max = n_max


class PartialSumNotZeroFree(ApproximationError):
    """The partial sum has zeros in the closed unit disk; increase the degree.

    The offending roots (when computable) are attached as ``roots``.
    """

    def __init__(self, message: str, roots=None):
        super().__init__(message)
        self.roots = roots


class SeriesUnreliable(ApproximationError):
    """Truncated-series evaluation was requested outside its trusted radius."""


class DomainError(ApproximationError):
    """A numeric argument lies outside the formula's domain of validity."""


class EvaluationFailure(ApproximationError):
    """The function cannot be evaluated at the requested point."""


class RootSolverFailed(ApproximationError):
    """The simultaneous root iteration did not produce trustworthy roots."""


class ZeroDenominator(ApproximationError):
    """A sampled denominator underflowed to zero."""


class InsufficientData(ApproximationError):
    """Not enough data points for the requested fit."""


class DenominatorVanishesInDisk(ApproximationError):
    """A rational function's denominator has zeros in the closed unit disk."""


class ParseError(ApproximationError):
    """Malformed function descriptor text.  Carries the offending position."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position
