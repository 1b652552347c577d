"""Truncated complex power-series arithmetic.

A series of order K is the coefficient list c_0..c_K of a Taylor expansion
about 0.  All operations are pure; binary operations truncate to the shorter
operand, never extend silently (callers pad explicitly when they need more
headroom).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import polynomial as npp

from .errors import NonzeroConstantTerm, OrderTooSmall, ZeroConstantTerm


@dataclass(frozen=True)
class TruncatedSeries:
    """Taylor coefficients c_0..c_K about 0, truncation order K = len - 1."""

    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=np.complex128)
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coefficients must be a non-empty 1-d sequence")
        if not np.all(np.isfinite(c.real)) or not np.all(np.isfinite(c.imag)):
            raise ValueError("series coefficients must be finite")
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(np.zeros(order + 1))

    def coefficient(self, k: int) -> complex:
        return complex(self.coeffs[k])

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise OrderTooSmall(
                f"cannot truncate order-{self.order} series to order {order}"
            )
        return TruncatedSeries(self.coeffs[: order + 1])

    def pad(self, order: int) -> "TruncatedSeries":
        """Extend with explicit zero coefficients up to `order`."""
        if order <= self.order:
            return self.truncate(order)
        out = np.zeros(order + 1, dtype=np.complex128)
        out[: self.coeffs.size] = self.coeffs
        return TruncatedSeries(out)

    def evaluate(self, z):
        """Horner evaluation of the truncating polynomial at z (scalar or array)."""
        return npp.polyval(z, self.coeffs)

    def __repr__(self):
        return f"TruncatedSeries(order={self.order}, coeffs={self.coeffs.tolist()!r})"


def integrate(f: TruncatedSeries) -> TruncatedSeries:
    """Termwise antiderivative with value 0 at the origin.

    The result has order K+1: coefficient 0 is 0 and coefficient k is
    f_{k-1}/k.  This is the one operation that extends the order, so that
    no input coefficient is lost.
    """
    out = np.empty(f.coeffs.size + 1, dtype=np.complex128)
    out[0] = 0.0
    out[1:] = f.coeffs / np.arange(1, f.coeffs.size + 1)
    return TruncatedSeries(out)


def exp_series(F: TruncatedSeries) -> TruncatedSeries:
    """Coefficients of exp(F) for a series F with F(0) = 0.

    Uses the standard ODE recurrence from g' = F'.g:

        (k+1) g_{k+1} = sum_{j=0..k} (j+1) F_{j+1} g_{k-j},   g_0 = 1.

    The result has the same order as F.
    """
    if F.coeffs[0] != 0:
        raise NonzeroConstantTerm(
            f"exp_series requires a zero constant term, got {F.coeffs[0]}"
        )
    K = F.order
    g = np.zeros(K + 1, dtype=np.complex128)
    g[0] = 1.0
    # w[j] = (j+1) F_{j+1}, the coefficients of F'
    w = np.arange(1, K + 1) * F.coeffs[1:]
    for k in range(K):
        g[k + 1] = np.dot(w[: k + 1], g[k::-1]) / (k + 1)
    return TruncatedSeries(g)


def multiply(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated to the shorter operand's order."""
    K = min(a.order, b.order)
    prod = np.convolve(a.coeffs[: K + 1], b.coeffs[: K + 1])
    return TruncatedSeries(prod[: K + 1])


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    K = min(a.order, b.order)
    return TruncatedSeries(a.coeffs[: K + 1] + b.coeffs[: K + 1])


def subtract(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    K = min(a.order, b.order)
    return TruncatedSeries(a.coeffs[: K + 1] - b.coeffs[: K + 1])


def divide(num: TruncatedSeries, den: TruncatedSeries) -> TruncatedSeries:
    """Series quotient num/den, truncated to the shorter operand's order.

    Requires den(0) != 0; coefficients follow from num = quotient.den.
    """
    if den.coeffs[0] == 0:
        raise ZeroConstantTerm("series division requires a nonzero constant term")
    K = min(num.order, den.order)
    q = np.zeros(K + 1, dtype=np.complex128)
    for k in range(K + 1):
        acc = num.coeffs[k]
        if k:
            acc = acc - np.dot(q[:k], den.coeffs[k:0:-1])
        q[k] = acc / den.coeffs[0]
    return TruncatedSeries(q)


def log_derivative_series(P, K: int) -> TruncatedSeries:
    """Taylor coefficients e_0..e_K of P'/P about 0, for a polynomial P.

    From P' = e.P:  e_k = [(k+1) p_{k+1} - sum_{j<k} e_j p_{k-j}] / p_0,
    with p_k = 0 beyond deg P.  Requires P(0) != 0.
    """
    p = np.asarray(P.coeffs, dtype=np.complex128)
    if p[0] == 0:
        raise ZeroConstantTerm("log-derivative series requires P(0) != 0")
    padded = np.zeros(K + 2, dtype=np.complex128)
    padded[: min(p.size, K + 2)] = p[: K + 2]
    e = np.zeros(K + 1, dtype=np.complex128)
    for k in range(K + 1):
        acc = (k + 1) * padded[k + 1]
        if k:
            acc = acc - np.dot(e[:k], padded[k:0:-1])
        e[k] = acc / padded[0]
    return TruncatedSeries(e)
