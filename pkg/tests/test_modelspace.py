import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import exponent_datas, space_exprs
from elliptica.errors import (
    DomainError,
    NonIntegerChi,
    NonPolynomialQuotient,
    ParseError,
    PurityError,
)
from elliptica.exactpoly import RatPoly, eval_at, is_palindromic
from elliptica.modelspace import (
    ExponentData,
    Product,
    Projective,
    Sphere,
    exponent_data,
    formal_dimension,
    homology_poincare_model,
    homology_poincare_pure,
    homotopy_poincare,
    invariants,
    leaves,
    parse_space,
    power,
    product,
    render,
)


def P(*cs):
    return RatPoly(tuple(F(c) for c in cs))


class TestParse:
    def test_two_leaf_product(self):
        assert parse_space("S4 x CP2") == Product((Sphere(4), Projective(2)))

    def test_power_expansion(self):
        assert parse_space("(CP1)^3") == Product((Projective(1), Projective(1), Projective(1)))

    def test_simply_connected_required(self):
        with pytest.raises(DomainError):
            parse_space("S1")
        with pytest.raises(DomainError):
            parse_space("S0")
        with pytest.raises(DomainError):
            parse_space("CP0")

    def test_case_and_whitespace_insensitive(self):
        assert parse_space("s4X cp2") == parse_space("S4 x CP2")
        assert parse_space("C P 2") == Projective(2)

    def test_nested_products_flatten(self):
        assert parse_space("(S2 x S3)^2") == Product(
            (Sphere(2), Sphere(3), Sphere(2), Sphere(3))
        )

    def test_power_one_collapses(self):
        assert parse_space("CP2^1") == Projective(2)

    def test_parse_errors_carry_positions(self):
        with pytest.raises(ParseError) as err:
            parse_space("S4 x")
        assert err.value.position == 4
        with pytest.raises(ParseError):
            parse_space("S4 ^")  # power binds an atom, digits must follow
        with pytest.raises(ParseError):
            parse_space("(S4 x CP2")
        with pytest.raises(ParseError):
            parse_space("Q3")
        with pytest.raises(ParseError):
            parse_space("CP2 )")
        with pytest.raises(ParseError):
            parse_space("CP2^0")
        with pytest.raises(ParseError):
            parse_space("")

    def test_render_groups_adjacent_factors(self):
        assert render(parse_space("S4 x CP2 x CP2 x CP2")) == "S4 x CP2^3"


@settings(max_examples=300)
@given(expr=space_exprs())
def test_parse_render_round_trip(expr):
    assert parse_space(render(expr)) == expr


class TestExponentData:
    def test_even_sphere(self):
        assert exponent_data(Sphere(4)) == ExponentData((4,), (2,))

    def test_projective(self):
        assert exponent_data(Projective(2)) == ExponentData((3,), (1,))

    def test_odd_sphere(self):
        assert exponent_data(Sphere(3)) == ExponentData((2,), ())

    def test_product_concatenates_and_sorts(self):
        data = exponent_data(parse_space("CP3 x S2"))
        assert data == ExponentData((2, 4), (1, 1))

    def test_validation(self):
        with pytest.raises(DomainError):
            ExponentData((1,), ())
        with pytest.raises(DomainError):
            ExponentData((), (0,))

    def test_sorted_storage(self):
        assert ExponentData((5, 2), (3, 1)).b == (2, 5)


class TestPoincarePolynomials:
    def test_homotopy_s2(self):
        assert homotopy_poincare(ExponentData((2,), (1,))) == P(0, 0, 1, 1)

    def test_homotopy_cpn(self):
        for n in (1, 2, 5):
            data = exponent_data(Projective(n))
            expect = RatPoly.monomial(2) + RatPoly.monomial(2 * n + 1)
            assert homotopy_poincare(data) == expect

    def test_homotopy_empty(self):
        assert homotopy_poincare(ExponentData((), ())).is_zero

    def test_model_s2xs2(self):
        assert homology_poincare_model(parse_space("S2 x S2")) == P(1, 0, 2, 0, 1)

    def test_model_cp1xcp3(self):
        assert homology_poincare_model(parse_space("CP1 x CP3")) == P(1, 0, 2, 0, 2, 0, 2, 0, 1)

    def test_model_odd_sphere(self):
        assert homology_poincare_model(Sphere(3)) == P(1, 0, 0, 1)

    def test_pure_cp2(self):
        assert homology_poincare_pure(ExponentData((3,), (1,))) == P(1, 0, 1, 0, 1)

    def test_pure_s4(self):
        assert homology_poincare_pure(ExponentData((4,), (2,))) == P(1, 0, 0, 0, 1)

    def test_pure_product(self):
        # (1+t^2)(1+t^2+t^4), expanded by the multiplication oracle
        expect = P(1, 0, 1) * P(1, 0, 1, 0, 1)
        assert homology_poincare_pure(ExponentData((2, 3), (1, 1))) == expect

    def test_pure_needs_q_equal_r(self):
        with pytest.raises(PurityError):
            homology_poincare_pure(ExponentData((2,), ()))

    def test_pure_propagates_non_polynomial(self):
        with pytest.raises(NonPolynomialQuotient):
            homology_poincare_pure(ExponentData((2,), (5,)))


class TestInvariants:
    def test_cp2(self):
        rep = invariants(ExponentData((3,), (1,)))
        assert (rep.formal_dim, rep.chi, rep.chi_pi, rep.dim_pi) == (4, 3, 0, 2)
        assert rep.dim_h == 3

    def test_s3(self):
        rep = invariants(ExponentData((2,), ()))
        assert (rep.formal_dim, rep.chi_pi, rep.chi, rep.dim_pi) == (3, -1, 0, 1)
        assert rep.dim_h is None

    def test_s4(self):
        rep = invariants(ExponentData((4,), (2,)))
        assert rep.formal_dim == (2 * 4 - 1) - (2 * 2 - 1) == 4

    def test_point_space_conventions(self):
        rep = invariants(ExponentData((), ()))
        assert (rep.formal_dim, rep.chi, rep.dim_pi, rep.dim_h) == (0, 1, 0, 1)

    def test_non_integer_chi(self):
        with pytest.raises(NonIntegerChi):
            invariants(ExponentData((3,), (2,)))


@settings(max_examples=200)
@given(expr=space_exprs())
def test_homotopy_additive_homology_multiplicative(expr):
    data = exponent_data(expr)
    dim_pi_total = sum(
        1 if isinstance(leaf, Sphere) and leaf.n % 2 else 2 for leaf in leaves(expr)
    )
    assert homotopy_poincare(data)(1) == dim_pi_total
    value = F(1)
    for leaf in leaves(expr):
        value *= homology_poincare_model(leaf)(1)
    assert homology_poincare_model(expr)(1) == value


@settings(max_examples=200)
@given(expr=space_exprs())
def test_halperin_signs_on_models(expr):
    data = exponent_data(expr)
    p = homology_poincare_model(expr)
    rep = invariants(data)
    assert eval_at(p, -1) >= 0
    assert rep.chi_pi <= 0


@settings(max_examples=150)
@given(data=exponent_datas())
def test_pure_polynomials_palindromic_with_degree_nx(data):
    if data.q != data.r:
        return
    try:
        p = homology_poincare_pure(data)
    except (NonPolynomialQuotient, NonIntegerChi):
        return
    rep = invariants(data)
    assert all(c.denominator == 1 and c >= 0 for c in p.coeffs)
    assert is_palindromic(p)
    assert p.degree == rep.formal_dim
    assert p(-1) == p(1)


def test_sum_bounded_by_product_lemma():
    # a_i <= b_i, b_i >= 1, and each i has b_i >= 2 or (a_i, b_i) = (0, 1):
    # then sum(a) <= prod(b)
    rng = random.Random(1729)
    for _ in range(500):
        m = rng.randint(1, 6)
        a, b = [], []
        for _ in range(m):
            if rng.random() < 0.25:
                a.append(F(0))
                b.append(F(1))
            else:
                bi = F(rng.randint(8, 32), 4)  # in [2, 8]
                b.append(bi)
                a.append(bi * F(rng.randint(0, 16), 16))
        total = sum(a)
        prod = F(1)
        for x in b:
            prod *= x
        assert total <= prod, (a, b)


@settings(max_examples=200)
@given(expr=space_exprs())
def test_model_exponents_round_trip_formal_dim(expr):
    # the formal dimension of a model equals the real dimension of the space
    data = exponent_data(expr)
    dim = sum(leaf.n if isinstance(leaf, Sphere) else 2 * leaf.m for leaf in leaves(expr))
    assert formal_dimension(data) == dim
    assert homology_poincare_model(expr).degree == dim
