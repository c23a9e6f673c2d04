from fractions import Fraction

import pytest
from hypothesis import strategies as st

from elliptica.census import enumerate_sac
from elliptica.exactpoly import RatPoly
from elliptica.modelspace import ExponentData, Projective, Sphere, product


def fractions_small():
    return st.builds(Fraction, st.integers(-9, 9), st.integers(1, 9))


def rat_polys(max_degree: int = 12, coeffs=None):
    if coeffs is None:
        coeffs = fractions_small()
    return st.lists(coeffs, min_size=0, max_size=max_degree + 1).map(lambda cs: RatPoly(tuple(cs)))


def leaf_exprs():
    return st.one_of(
        st.integers(min_value=2, max_value=9).map(Sphere),
        st.integers(min_value=1, max_value=6).map(Projective),
    )


def space_exprs(max_factors: int = 5):
    return st.one_of(
        leaf_exprs(),
        st.lists(leaf_exprs(), min_size=2, max_size=max_factors).map(product),
    )


def exponent_datas(max_b: int = 8, max_a: int = 4):
    return st.builds(
        ExponentData,
        b=st.lists(st.integers(2, max_b), min_size=0, max_size=4).map(tuple),
        a=st.lists(st.integers(1, max_a), min_size=0, max_size=3).map(tuple),
    )


@pytest.fixture(scope="session")
def census12():
    return enumerate_sac(12)


@pytest.fixture(scope="session")
def census8(census12):
    return [e for e in census12 if e.invariants.formal_dim <= 8]


@pytest.fixture(scope="session")
def census6(census12):
    return [e for e in census12 if e.invariants.formal_dim <= 6]
