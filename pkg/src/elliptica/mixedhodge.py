"""Mixed Hodge polynomials of projective-space products, their homotopical
analogues, specializations, and certified comparisons on boxes.

Model mixed Hodge polynomials depend on u, v only through the product w = uv
(every term has p == q), so box certification internally runs in the two
variables (t, w) over [eps, rmax] x [eps^2, rmax^2]; the public API stays
trivariate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

from .errors import DomainError, UnsupportedLeaf
from .exactpoly import RatPoly
from .modelspace import Projective, SpaceExpr, Sphere, leaves

MHKey = tuple[int, int, int]


@dataclass(frozen=True)
class MHPoly:
    """Sparse sum of dim * t^k u^p v^q terms keyed by (k, p, q); dims positive."""

    terms: Mapping[MHKey, int]

    def __post_init__(self) -> None:
        cleaned = {}
        for key, dim in self.terms.items():
            if dim < 0:
                raise ValueError(f"negative dimension at {key}")
            if dim:
                cleaned[tuple(key)] = int(dim)
        object.__setattr__(self, "terms", cleaned)

    @property
    def is_hodge_tate(self) -> bool:
        return all(p == q for (_, p, q) in self.terms)


def mh_add(x: MHPoly, y: MHPoly) -> MHPoly:
    out = dict(x.terms)
    for key, dim in y.terms.items():
        out[key] = out.get(key, 0) + dim
    return MHPoly(out)


def mh_mul(x: MHPoly, y: MHPoly) -> MHPoly:
    out: dict[MHKey, int] = {}
    for (k1, p1, q1), d1 in x.terms.items():
        for (k2, p2, q2), d2 in y.terms.items():
            key = (k1 + k2, p1 + p2, q1 + q2)
            out[key] = out.get(key, 0) + d1 * d2
    return MHPoly(out)


def evaluate(m: MHPoly, t, u, v) -> Fraction:
    t, u, v = Fraction(t), Fraction(u), Fraction(v)
    return sum((dim * t ** k * u ** p * v ** q for (k, p, q), dim in m.terms.items()), Fraction(0))


def _projective_leaves(expr: SpaceExpr) -> tuple[Projective, ...]:
    ls = leaves(expr)
    for leaf in ls:
        if isinstance(leaf, Sphere):
            raise UnsupportedLeaf(f"no mixed Hodge polynomial for S{leaf.n}")
    return ls  # type: ignore[return-value]


def mh_model(expr: SpaceExpr) -> MHPoly:
    """MH of a product of projective spaces:
    prod_i (1 + t^2 uv + ... + t^(2n_i) (uv)^(n_i))."""
    result = MHPoly({(0, 0, 0): 1})
    for leaf in _projective_leaves(expr):
        factor = MHPoly({(2 * i, i, i): 1 for i in range(leaf.m + 1)})
        result = mh_mul(result, factor)
    return result


def mh_pi_model(expr: SpaceExpr) -> MHPoly:
    """MH^pi of a product of projective spaces:
    sum_i (t^2 uv + t^(2n_i + 1) (uv)^(n_i + 1))."""
    result = MHPoly({})
    for leaf in _projective_leaves(expr):
        term = MHPoly({(2, 1, 1): 1, (2 * leaf.m + 1, leaf.m + 1, leaf.m + 1): 1})
        result = mh_add(result, term)
    return result


def specialize(m: MHPoly) -> RatPoly:
    """Set u = v = 1 and collapse over the Hodge indices."""
    if not m.terms:
        return RatPoly.zero()
    top = max(k for (k, _, _) in m.terms)
    coeffs = [Fraction(0)] * (top + 1)
    for (k, _, _), dim in m.terms.items():
        coeffs[k] += dim
    return RatPoly(tuple(coeffs))


# -- two-variable reduction (t, w = uv) and box certification ----------------

Poly2 = dict[tuple[int, int], int]


def _two_var(m: MHPoly) -> Poly2:
    out: Poly2 = {}
    for (k, p, q), dim in m.terms.items():
        if p != q:
            raise ValueError("internal: expected a Hodge-Tate polynomial")
        out[(k, p)] = out.get((k, p), 0) + dim
    return out


def _eval2(poly: Poly2, t: Fraction, w: Fraction) -> Fraction:
    return sum((c * t ** k * w ** p for (k, p), c in poly.items()), Fraction(0))


@dataclass(frozen=True)
class BoxVerdict:
    """Sign of MH^n - n*MH^pi on a closed box.

    status 'positive' certifies strict positivity everywhere; 'not_positive'
    carries an exact witness point with a non-positive value; 'unknown' means
    the bisection depth was exhausted.
    """

    status: str  # "positive" | "not_positive" | "unknown"
    witness: Optional[tuple[Fraction, Fraction, Fraction]]
    cells: int


def _witness_uv(w: Fraction, eps: Fraction, rmax: Fraction) -> tuple[Fraction, Fraction]:
    # split w = u*v with both factors inside [eps, rmax]
    if w <= eps * rmax:
        return eps, w / eps
    return w / rmax, rmax


def mh_box_inequality(expr: SpaceExpr, n: int, eps, rmax, max_depth: int = 12) -> BoxVerdict:
    """Decide MH^pi_{X^n} < MH_{X^n} on [eps, rmax]^3, exactly.

    MH and MH^pi have non-negative coefficients, hence are coordinatewise
    nondecreasing on the positive orthant; on each cell the difference is
    bounded below by MH(low corner)^n - n*MH^pi(high corner).  Cells failing
    that bound are bisected recursively with exact rational arithmetic.
    """
    if n < 1:
        raise DomainError("n must be a positive integer")
    eps, rmax = Fraction(eps), Fraction(rmax)
    if eps <= 0 or rmax < eps:
        raise DomainError("need 0 < eps <= rmax")
    mh2 = _two_var(mh_model(expr))
    pi2 = _two_var(mh_pi_model(expr))
    cells = 0

    def diff_at(t: Fraction, w: Fraction) -> Fraction:
        return _eval2(mh2, t, w) ** n - n * _eval2(pi2, t, w)

    def cell(t0, t1, w0, w1, depth) -> tuple[str, Optional[tuple[Fraction, Fraction]]]:
        nonlocal cells
        cells += 1
        lower = _eval2(mh2, t0, w0) ** n - n * _eval2(pi2, t1, w1)
        if lower > 0:
            return "positive", None
        probes = {(t0, w0), (t1, w1), ((t0 + t1) / 2, (w0 + w1) / 2)}
        for t, w in sorted(probes):
            if diff_at(t, w) <= 0:
                return "not_positive", (t, w)
        if depth == 0:
            return "unknown", None
        t_halves = [(t0, t1)] if t0 == t1 else [(t0, (t0 + t1) / 2), ((t0 + t1) / 2, t1)]
        w_halves = [(w0, w1)] if w0 == w1 else [(w0, (w0 + w1) / 2), ((w0 + w1) / 2, w1)]
        if len(t_halves) == 1 and len(w_halves) == 1:
            return "unknown", None  # a point cell is decided by the probes above
        saw_unknown = False
        for ta, tb in t_halves:
            for wa, wb in w_halves:
                status, witness = cell(ta, tb, wa, wb, depth - 1)
                if status == "not_positive":
                    return status, witness
                if status == "unknown":
                    saw_unknown = True
        return ("unknown" if saw_unknown else "positive"), None

    status, witness2 = cell(eps, rmax, eps * eps, rmax * rmax, max_depth)
    if witness2 is None:
        return BoxVerdict(status, None, cells)
    t, w = witness2
    u, v = _witness_uv(w, eps, rmax)
    return BoxVerdict(status, (t, u, v), cells)


@dataclass(frozen=True)
class MHThresholdResult:
    eps: Fraction
    rmax: Fraction
    status: str  # "ok" | "unknown"
    threshold: Optional[int]
    tail_constant: int
    per_n: Mapping[int, str]


def mh_box_threshold(expr: SpaceExpr, eps, rmax, max_depth: int = 12) -> MHThresholdResult:
    """Smallest n0 with MH^pi_{X^n} < MH_{X^n} on the box for all n >= n0.

    Same tail argument as the ray threshold with P(eps) replaced by
    MH(eps, eps, eps), the box minimum of MH.  If any needed per-n verdict is
    'unknown' the overall status is 'unknown' and no threshold is claimed.
    """
    eps, rmax = Fraction(eps), Fraction(rmax)
    if eps <= 0 or rmax < eps:
        raise DomainError("need 0 < eps <= rmax")
    corner = evaluate(mh_model(expr), eps, eps, eps)
    if corner <= 1:
        raise DomainError("MH(eps, eps, eps) must exceed 1")
    n_star = max(1, math.ceil(Fraction(1, 1) / (corner - 1)))
    per_n: dict[int, str] = {}
    last_fail = 0
    saw_unknown = False
    n = 0
    while True:
        n += 1
        if n > 10_000:
            raise RuntimeError("box threshold search did not terminate")
        verdict = mh_box_inequality(expr, n, eps, rmax, max_depth=max_depth)
        per_n[n] = verdict.status
        if verdict.status == "not_positive":
            last_fail = n
        elif verdict.status == "unknown":
            saw_unknown = True
        elif n >= n_star:
            assert Fraction(n + 1, n) <= corner  # monotone tail, as on rays
            break
    if saw_unknown:
        return MHThresholdResult(eps, rmax, "unknown", None, n_star, per_n)
    return MHThresholdResult(eps, rmax, "ok", last_fail + 1, n_star, per_n)
