from collections import Counter
from fractions import Fraction as F
from math import comb

import pytest

import elliptica.census as census_mod
from elliptica.bounds import (
    bounds_report,
    decompose_projective,
    hilali_verdict,
    inequality_suite,
    q_bound_poly,
)
from elliptica.errors import CounterexampleFound, NonPolynomialQuotient
from elliptica.exactpoly import RatPoly, is_palindromic
from elliptica.modelspace import (
    ExponentData,
    Projective,
    Sphere,
    exponent_data,
    homology_poincare_model,
    homology_poincare_pure,
    parse_space,
)


def P(*cs):
    return RatPoly(tuple(F(c) for c in cs))


class TestQBoundPoly:
    def test_odd_sphere(self):
        assert q_bound_poly(ExponentData((2,), ())) == P(1, 1, 1, 1)

    def test_pure_case_equals_poincare(self):
        data = ExponentData((3,), (1,))
        assert q_bound_poly(data) == homology_poincare_pure(data) == P(1, 0, 1, 0, 1)

    def test_two_odd_spheres(self):
        # (1 + t + t^2 + t^3)^2, via the multiplication oracle
        assert q_bound_poly(ExponentData((2, 2), ())) == P(1, 1, 1, 1) * P(1, 1, 1, 1)
        assert q_bound_poly(ExponentData((2, 2), ())) == P(1, 2, 3, 4, 3, 2, 1)

    def test_q_less_than_r_rejected(self):
        with pytest.raises(NonPolynomialQuotient):
            q_bound_poly(ExponentData((2,), (1, 1)))


class TestBoundsReport:
    def test_cpn_b1_bound(self):
        for n in range(1, 7):
            rep = bounds_report(exponent_data(Projective(n)))
            assert rep.b1_bound == n + 1

    def test_even_sphere_b1_bound(self):
        for n in range(1, 6):
            rep = bounds_report(exponent_data(Sphere(2 * n)))
            assert rep.b1_bound == 2

    def test_cp2_amgm_and_pavlov(self):
        rep = bounds_report(ExponentData((3,), (1,)))
        assert rep.amgm_bound == 8
        assert rep.pavlov_total == 9

    def test_value_identity(self):
        rep = bounds_report(ExponentData((2, 2), ()))
        assert rep.q_at_1 == 16 and rep.fh_bound == 16
        assert rep.q_at_1 == rep.q_poly(1)

    def test_b1_absent_without_a_exponents(self):
        assert bounds_report(ExponentData((2,), ())).b1_bound is None

    def test_warning_flag_on_non_sac_data(self):
        rep = bounds_report(ExponentData((2, 2), (2,)))
        assert rep.sac_warning
        rep = bounds_report(ExponentData((3,), (1,)))
        assert not rep.sac_warning

    def test_pavlov_perdegree_shape(self):
        rep = bounds_report(ExponentData((3,), (1,)))  # n_X = 4
        assert rep.pavlov_perdegree == (1, 2, 3, 2, 1)
        assert rep.pavlov_perdegree[0] == comb(4, 0)
        assert rep.pavlov_perdegree[2] == (comb(4, 2) + 1) // 2


class TestHilaliVerdict:
    def test_cp2_verified(self):
        v = hilali_verdict(ExponentData((3,), (1,)))
        assert (v.kind, v.dim_pi, v.dim_h) == ("verified", 2, 3)

    def test_s4_verified_with_equality(self):
        v = hilali_verdict(ExponentData((4,), (2,)))
        assert (v.kind, v.dim_pi, v.dim_h) == ("verified", 2, 2)

    def test_s3_bounds_consistent(self):
        v = hilali_verdict(ExponentData((2,), ()))
        assert v.kind == "bounds_consistent"
        assert v.dim_pi == 1 and v.dim_h_lower == 2
        assert v.dim_pi <= v.dim_h_lower
        assert v.upper_bounds["fh_bound"] == 4

    def test_not_applicable_when_sac_fails(self):
        v = hilali_verdict(ExponentData((3, 4, 6), (2, 3, 4)))
        assert v.kind == "not_applicable"
        assert "S.A.C." in v.reason


class TestInequalitySuite:
    def test_s4_equalities(self):
        by_name = {c.name: c for c in inequality_suite(ExponentData((4,), (2,)))}
        assert by_name["n_X >= q + r"].lhs == 4 and by_name["n_X >= q + r"].rhs == 2
        c = by_name["n_X >= sum(2 a_i)"]
        assert c.lhs == c.rhs == 4 and c.holds  # equality for even spheres

    def test_cp2_sharpened(self):
        by_name = {c.name: c for c in inequality_suite(ExponentData((3,), (1,)))}
        c = by_name["2 n_X - q >= sum(2 b_j - 1)"]
        assert (c.lhs, c.rhs, c.holds) == (7, 5, True)

    def test_two_odd_spheres_tight(self):
        by_name = {c.name: c for c in inequality_suite(ExponentData((2, 2), ()))}
        c = by_name["n_X >= 3 q - r"]
        assert (c.lhs, c.rhs, c.holds) == (6, 6, True)

    def test_all_hold_on_census(self, census12):
        for entry in census12:
            assert all(c.holds for c in inequality_suite(entry.data))


THREEFOLDS = [
    (P(1, 0, 1, 0, 1, 0, 1), (Projective(3),)),
    (P(1, 0, 2, 0, 2, 0, 1), (Projective(2), Projective(1))),
    (P(1, 0, 3, 0, 3, 0, 1), (Projective(1), Projective(1), Projective(1))),
]

FOURFOLDS = [
    (P(1, 0, 1, 0, 1, 0, 1, 0, 1), (Projective(4),), False),
    (P(1, 0, 1, 0, 2, 0, 1, 0, 1), (Projective(2), Sphere(4)), True),
    (P(1, 0, 2, 0, 2, 0, 2, 0, 1), (Projective(3), Projective(1)), False),
    (P(1, 0, 2, 0, 3, 0, 2, 0, 1), (Projective(2), Projective(2)), False),
    (P(1, 0, 3, 0, 4, 0, 3, 0, 1), (Projective(2), Projective(1), Projective(1)), False),
    (P(1, 0, 4, 0, 6, 0, 4, 0, 1), (Projective(1),) * 4, False),
]


class TestDecomposeProjective:
    @pytest.mark.parametrize("poly,factors", THREEFOLDS)
    def test_kahler_threefolds(self, poly, factors):
        assert Counter(decompose_projective(poly)) == Counter(factors)

    @pytest.mark.parametrize("poly,factors,spheres", FOURFOLDS)
    def test_kahler_fourfolds(self, poly, factors, spheres):
        got = decompose_projective(poly, allow_even_spheres=spheres)
        assert got is not None and Counter(got) == Counter(factors)

    def test_sphere_factor_needs_permission(self):
        poly = P(1, 0, 1, 0, 2, 0, 1, 0, 1)
        assert decompose_projective(poly, allow_even_spheres=False) is None

    def test_projective_cone_fails(self):
        cone = P(1, 0, 1, 0, 2, 0, 1)
        assert decompose_projective(cone, allow_even_spheres=True) is None
        assert not is_palindromic(cone)

    def test_square_of_cp2(self):
        assert decompose_projective(P(1, 0, 2, 0, 3, 0, 2, 0, 1)) == (
            Projective(2),
            Projective(2),
        )

    def test_trivial_and_bad_inputs(self):
        assert decompose_projective(RatPoly.one()) == ()
        assert decompose_projective(RatPoly.zero()) is None
        assert decompose_projective(P(2, 0, 2)) is None
        assert decompose_projective(P(1, 1)) is None
        assert decompose_projective(P(1, 0, F(1, 2))) is None

    def test_prefers_projective_over_sphere(self):
        # 1 + t^2 is both CP^1 and S^2; the tie goes to the projective factor
        assert decompose_projective(P(1, 0, 1), allow_even_spheres=True) == (Projective(1),)

    def test_round_trip_on_projective_products(self):
        # every multiset of CP factors with total complex dimension <= 10 is a fixed point
        def multisets(total, max_part):
            if total == 0:
                yield ()
                return
            for part in range(min(total, max_part), 0, -1):
                for rest in multisets(total - part, part):
                    yield (part,) + rest

        for total in range(1, 11):
            for dims in multisets(total, total):
                expr_leaves = tuple(Projective(m) for m in dims)
                poly = homology_poincare_model(
                    expr_leaves[0] if len(expr_leaves) == 1 else parse_space(
                        " x ".join(f"CP{m}" for m in dims)
                    )
                )
                got = decompose_projective(poly)
                assert got is not None and Counter(got) == Counter(expr_leaves), dims


class TestCensusScaleProperties:
    def test_q_poly_dominates_betti_numbers(self, census12):
        for entry in census12:
            if entry.data.q != entry.data.r:
                continue
            p = homology_poincare_pure(entry.data)
            qp = entry.bounds.q_poly
            assert qp.degree == p.degree
            for k in range(p.degree + 1):
                assert p.coefficient(k) <= qp.coefficient(k), entry.data

    def test_q_poly_coefficients_below_binomials(self, census12):
        for entry in census12:
            n_x = entry.invariants.formal_dim
            qp = entry.bounds.q_poly
            for m in range(qp.degree + 1):
                assert qp.coefficient(m) <= comb(n_x, m), entry.data

    def test_betti_numbers_below_pavlov_perdegree(self, census12):
        for entry in census12:
            if entry.data.q != entry.data.r:
                continue
            p = homology_poincare_pure(entry.data)
            for m in range(p.degree + 1):
                assert p.coefficient(m) <= entry.bounds.pavlov_perdegree[m]

    def test_bound_chain_over_census(self, census12):
        for entry in census12:
            b = entry.bounds
            assert b.fh_bound <= b.pow2_nx_minus_r <= b.pow2_nx <= b.giant
            assert not b.ordering_violations
            if b.b1_bound is not None:
                assert b.fh_bound <= b.b1_bound
            if b.amgm_bound is not None:
                assert b.fh_bound <= b.amgm_bound

    def test_no_pure_fail_on_census(self, census12):
        assert all(e.verdict.kind in ("verified", "bounds_consistent") for e in census12)


def test_pure_fail_aborts_loudly(monkeypatch):
    from elliptica.bounds import HilaliVerdict

    def fake_verdict(data, sac=None, bounds=None):
        return HilaliVerdict("pure_fail", dim_pi=99, dim_h=1)

    monkeypatch.setattr(census_mod, "hilali_verdict", fake_verdict)
    with pytest.raises(CounterexampleFound):
        census_mod.build_entry(ExponentData((2,), (1,)))
