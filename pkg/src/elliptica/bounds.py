"""Upper-bound ladder on homology dimension, Hilali verdicts, and
factorization of Poincare polynomials into projective-space factors."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod
from typing import Mapping, Optional

from .arithcond import SacReport, check_condition
from .errors import NonPolynomialQuotient
from .exactpoly import RatPoly, cyclotomic_quotient
from .modelspace import (
    ExponentData,
    Projective,
    Sphere,
    formal_dimension,
    homology_poincare_pure,
    projective_poincare,
    sphere_poincare,
)


def q_bound_poly(data: ExponentData) -> RatPoly:
    """The coefficientwise bound polynomial
    prod(1 - t^(2b)) / ((1 - t)^(q-r) * prod(1 - t^(2a))).

    For admissible (S.A.C.) data this is a polynomial with non-negative
    coefficients, degree n_X and constant term 1, and its coefficients
    dominate the Betti numbers degree by degree.
    """
    q, r = data.q, data.r
    if q < r:
        raise NonPolynomialQuotient("q < r: the bound polynomial does not exist")
    return cyclotomic_quotient(data.b, data.a, q - r)


@dataclass(frozen=True)
class BoundsReport:
    q_poly: RatPoly
    q_at_1: int
    fh_bound: Fraction
    pow2_nx: int
    pow2_nx_minus_r: Fraction
    b1_bound: Optional[Fraction]
    amgm_bound: Optional[Fraction]
    pavlov_perdegree: tuple[int, ...]
    pavlov_total: int
    giant: int
    sac_warning: bool
    ordering_violations: tuple[str, ...]


def bounds_report(data: ExponentData, *, sac_holds: Optional[bool] = None) -> BoundsReport:
    """All upper bounds on dim H, as exact rationals.

    Callers should pass S.A.C. data; otherwise the report is still computed
    but flagged with sac_warning, and any broken ordering from the proof
    chains is recorded in ordering_violations (always empty on admissible
    data).
    """
    if sac_holds is None:
        sac_holds = check_condition(data, "SAC").holds
    q, r = data.q, data.r
    n_x = formal_dimension(data)
    qp = q_bound_poly(data)
    q_at_1 = qp(1)
    assert q_at_1.denominator == 1
    q_at_1 = int(q_at_1)
    fh = Fraction(2) ** (q - r) * Fraction(prod(data.b), prod(data.a))
    assert fh == q_at_1  # telescoping: Q(1) = prod(2b)/prod(2a)
    pow2_nx = 2 ** n_x
    pow2_shift = Fraction(2) ** (n_x - r)
    b1 = None
    if q >= 1 and r >= 1:
        b1 = Fraction(2 * max(data.b)) ** q / Fraction(2 * min(data.a)) ** r
    amgm = Fraction(2 * n_x, q) ** q if q >= 1 else None
    perdegree = tuple(
        comb(n_x, m) if m in (0, n_x) else (comb(n_x, m) + 1) // 2 for m in range(n_x + 1)
    )
    # Pavlov's half-binomial needs n_X >= 1; the point space has dim H = 1.
    pavlov_total = 2 ** (n_x - 1) + 1 if n_x >= 1 else 1
    giant = (2 * n_x) ** n_x
    checks = [
        ("fh_bound <= pow2_nx_minus_r", fh <= pow2_shift),
        ("pow2_nx_minus_r <= pow2_nx", pow2_shift <= pow2_nx),
        ("pow2_nx <= giant", pow2_nx <= giant),
        ("q_poly coefficients non-negative", all(c >= 0 for c in qp.coeffs)),
        ("q_poly degree == n_X", (0 if qp.is_zero else qp.degree) == n_x),
        ("q_poly constant term == 1", qp.coefficient(0) == 1),
    ]
    if b1 is not None:
        checks.append(("fh_bound <= b1_bound", fh <= b1))
    if amgm is not None:
        checks.append(("fh_bound <= amgm_bound", fh <= amgm))
    violations = tuple(name for name, ok in checks if not ok)
    return BoundsReport(
        q_poly=qp,
        q_at_1=q_at_1,
        fh_bound=fh,
        pow2_nx=pow2_nx,
        pow2_nx_minus_r=pow2_shift,
        b1_bound=b1,
        amgm_bound=amgm,
        pavlov_perdegree=perdegree,
        pavlov_total=pavlov_total,
        giant=giant,
        sac_warning=not sac_holds,
        ordering_violations=violations,
    )


@dataclass(frozen=True)
class HilaliVerdict:
    """One of:

    - verified:          q == r and dim_pi <= dim_h (both exact);
    - pure_fail:         q == r and dim_pi > dim_h (a counterexample!);
    - bounds_consistent: q > r, only upper bounds on dim H are known, so the
                         verdict carries them and never claims a proof;
    - not_applicable:    the data fails S.A.C. and is not realizable.
    """

    kind: str
    dim_pi: Optional[int] = None
    dim_h: Optional[int] = None
    dim_h_lower: Optional[int] = None
    upper_bounds: Optional[Mapping[str, object]] = None
    reason: Optional[str] = None


def hilali_verdict(
    data: ExponentData,
    *,
    sac: Optional[SacReport] = None,
    bounds: Optional[BoundsReport] = None,
) -> HilaliVerdict:
    """Compare dim pi against dim H (exact when q == r, bounded when q > r)."""
    if sac is None:
        sac = check_condition(data, "SAC")
    if not sac.holds:
        failing = list(sac.failing_subset or ())
        return HilaliVerdict("not_applicable", reason=f"fails S.A.C. (subsequence indices {failing})")
    q, r = data.q, data.r
    if q == r:
        dim_h = int(homology_poincare_pure(data)(1))
        dim_pi = 2 * q
        kind = "verified" if dim_pi <= dim_h else "pure_fail"
        return HilaliVerdict(kind, dim_pi=dim_pi, dim_h=dim_h)
    if bounds is None:
        bounds = bounds_report(data, sac_holds=True)
    ubs: dict[str, object] = {
        "fh_bound": bounds.fh_bound,
        "pow2_nx": bounds.pow2_nx,
        "pow2_nx_minus_r": bounds.pow2_nx_minus_r,
    }
    if bounds.b1_bound is not None:
        ubs["b1_bound"] = bounds.b1_bound
    if bounds.amgm_bound is not None:
        ubs["amgm_bound"] = bounds.amgm_bound
    ubs["pavlov_total"] = bounds.pavlov_total
    ubs["giant"] = bounds.giant
    return HilaliVerdict("bounds_consistent", dim_pi=q + r, dim_h_lower=2, upper_bounds=ubs)


@dataclass(frozen=True)
class InequalityCheck:
    name: str
    lhs: int
    rhs: int
    holds: bool


def inequality_suite(data: ExponentData) -> tuple[InequalityCheck, ...]:
    """The proved inequalities between n_X, the exponents, q and r; all must
    hold on admissible data (the last three are the sharpened forms)."""
    q, r = data.q, data.r
    n_x = formal_dimension(data)
    sum_b = sum(data.b)
    sum_2b1 = sum(2 * b - 1 for b in data.b)
    sum_2a = sum(2 * a for a in data.a)
    chi_pi = r - q

    def mk(name: str, lhs: int, rhs: int) -> InequalityCheck:
        return InequalityCheck(name, lhs, rhs, lhs >= rhs)

    return (
        mk("n_X >= q + r", n_x, q + r),
        mk("n_X >= sum(b_j)", n_x, sum_b),
        mk("2 n_X - 1 >= sum(2 b_j - 1)", 2 * n_x - 1, sum_2b1),
        mk("n_X >= sum(2 a_i)", n_x, sum_2a),
        mk("n_X >= 3 q - r", n_x, 3 * q - r),
        mk("2 n_X - q >= sum(2 b_j - 1)", 2 * n_x - q, sum_2b1),
        mk("n_X >= sum(2 a_i) - 2 chi_pi", n_x, sum_2a - 2 * chi_pi),
    )


def decompose_projective(poly: RatPoly, allow_even_spheres: bool = False):
    """Factor a Poincare polynomial into projective-space factors
    1 + t^2 + ... + t^(2m) and, optionally, even-sphere factors 1 + t^(2n).

    Backtracking over candidate factors in decreasing degree, projective
    before sphere at equal degree, so the output is deterministic.  Returns a
    tuple of leaves (largest factors first) or None when no decomposition
    exists.
    """
    if poly.is_zero or poly.coefficient(0) != 1:
        return None
    cs = poly.coeffs
    if any(c.denominator != 1 or c < 0 for c in cs):
        return None
    if any(cs[k] for k in range(1, len(cs), 2)):
        return None
    if poly.degree == 0:
        return ()
    candidates: list[tuple[RatPoly, object]] = []
    for d in range(poly.degree - poly.degree % 2, 1, -2):
        candidates.append((projective_poincare(d // 2), Projective(d // 2)))
        if allow_even_spheres:
            candidates.append((sphere_poincare(d), Sphere(d)))

    def search(remaining: RatPoly, start: int):
        if remaining == RatPoly.one():
            return ()
        for idx in range(start, len(candidates)):
            factor, leaf = candidates[idx]
            if factor.degree > remaining.degree:
                continue
            quot, rem = divmod(remaining, factor)
            if rem.is_zero:
                tail = search(quot, idx)
                if tail is not None:
                    return (leaf,) + tail
        return None

    return search(poly, 0)
