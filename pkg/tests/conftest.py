"""Shared fixtures for crystal tests."""

import pytest

from kr_crystals.configurations import CrystalShape
from kr_crystals.polytope.models import Pattern


@pytest.fixture
def shape_b52() -> CrystalShape:
    """B^{5,2} of type A_4."""
    return CrystalShape(n=4, m=5, i=2)


@pytest.fixture
def sample_pattern(shape_b52) -> Pattern:
    """A member of B^{5,2} with every string datum non-trivial."""
    return Pattern(shape_b52, ((1, 0), (2, 1), (0, 1)))


@pytest.fixture
def shape_b32() -> CrystalShape:
    """B^{3,2} of type A_2, ten elements."""
    return CrystalShape(n=2, m=3, i=2)


@pytest.fixture
def shape_b33() -> CrystalShape:
    """B^{3,3} of type A_5."""
    return CrystalShape(n=5, m=3, i=3)


@pytest.fixture
def shape_b74() -> CrystalShape:
    """B^{7,4} of type A_6."""
    return CrystalShape(n=6, m=7, i=4)
