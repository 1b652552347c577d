"""Shared fixtures: the three-function catalog and cached constructions."""

from functools import lru_cache

import pytest

from cpolyapprox import (
    ComplexPolynomial,
    ConstantFunction,
    RationalFunction,
    ZeroFunction,
    construct,
)

CATALOG = {
    "zero": ZeroFunction(),
    "const1": ConstantFunction(1.0),
    "ratio": RationalFunction(
        ComplexPolynomial([1.0]), ComplexPolynomial([1.0, -0.5])
    ),
}


@lru_cache(maxsize=None)
def cached_construct(name: str, degree: int):
    return construct(CATALOG[name], degree)


@pytest.fixture(scope="session")
def catalog():
    return CATALOG


@pytest.fixture(scope="session")
def build():
    """Memoised construct keyed by catalog name, shared across the suite."""
    return cached_construct
