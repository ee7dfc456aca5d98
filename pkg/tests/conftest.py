from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hopfoid.algebra.unipoly import UniPoly
from hopfoid.diffmod import DiffModule
from hopfoid.finite_dual import DualClass

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_int = st.integers(-4, 4)
rational = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 5))


@st.composite
def polys(draw, max_deg=3, coeffs=small_int):
    return UniPoly(draw(st.lists(coeffs, max_size=max_deg + 1)))


@st.composite
def modules(draw, max_rank=2, max_deg=1):
    m = draw(st.integers(1, max_rank))
    return DiffModule([[draw(polys(max_deg)) for _ in range(m)] for _ in range(m)])


@st.composite
def classes(draw, max_rank=2, max_deg=1):
    M = draw(modules(max_rank, max_deg))
    phi = tuple(draw(polys(max_deg)) for _ in range(M.rank))
    v = tuple(draw(polys(max_deg)) for _ in range(M.rank))
    return DualClass(M, phi, v)


@pytest.fixture
def x():
    return UniPoly([0, 1])
