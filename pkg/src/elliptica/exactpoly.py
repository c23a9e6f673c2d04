"""Dense univariate polynomial arithmetic over Q with certified sign decisions.

Coefficients are `fractions.Fraction` values (arbitrary precision), stored
lowest degree first.  The zero polynomial is canonically the empty coefficient
tuple; its degree is deliberately undefined and raises ZeroPolynomialError
instead of returning a sentinel.  Nothing in this module touches floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Optional, Sequence

from .errors import DomainError, NonPolynomialQuotient, ZeroPolynomialError


def _canonical(coeffs: Iterable) -> tuple[Fraction, ...]:
    cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class RatPoly:
    """sum(coeffs[i] * t**i); the trailing coefficient is nonzero unless zero."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _canonical(self.coeffs))

    @classmethod
    def zero(cls) -> "RatPoly":
        return cls(())

    @classmethod
    def one(cls) -> "RatPoly":
        return cls((1,))

    @classmethod
    def monomial(cls, degree: int, coefficient=1) -> "RatPoly":
        return cls((0,) * degree + (coefficient,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomialError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            raise ZeroPolynomialError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __add__(self, other: "RatPoly") -> "RatPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(tuple(out))

    def __neg__(self) -> "RatPoly":
        return RatPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatPoly(tuple(c * other for c in self.coeffs))
        if self.is_zero or other.is_zero:
            return RatPoly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if ci:
                for j, cj in enumerate(other.coeffs):
                    out[i + j] += ci * cj
        return RatPoly(tuple(out))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int) -> "RatPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result, base = RatPoly.one(), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        x = Fraction(x)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "RatPoly":
        return RatPoly(tuple(i * self.coeffs[i] for i in range(1, len(self.coeffs))))

    def __divmod__(self, divisor: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        if divisor.is_zero:
            raise ZeroPolynomialError("division by the zero polynomial")
        if len(self.coeffs) < len(divisor.coeffs):
            return RatPoly(()), self
        rem = list(self.coeffs)
        dcs = divisor.coeffs
        dlc = dcs[-1]
        qlen = len(rem) - len(dcs) + 1
        quot = [Fraction(0)] * qlen
        for k in range(qlen - 1, -1, -1):
            c = rem[k + len(dcs) - 1] / dlc
            if c:
                quot[k] = c
                for j, dj in enumerate(dcs):
                    rem[k + j] -= c * dj
        return RatPoly(tuple(quot)), RatPoly(tuple(rem))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(f"t^{i}" if i > 1 else "t")
            else:
                parts.append(f"{c}*t^{i}" if i > 1 else f"{c}*t")
        return " + ".join(parts)


def eval_at(p: RatPoly, x) -> Fraction:
    """Exact Horner evaluation at a rational point."""
    return p(x)


def is_palindromic(p: RatPoly) -> bool:
    """True iff coeffs[i] == coeffs[deg - i] for every i (Poincare duality shape)."""
    cs = p.coeffs
    n = len(cs)
    return all(cs[i] == cs[n - 1 - i] for i in range(n))


def geometric_sum(k: int) -> RatPoly:
    """1 + t + ... + t**(k-1)."""
    if k < 1:
        raise DomainError("geometric_sum needs k >= 1")
    return RatPoly((1,) * k)


def _exact_div(p: RatPoly, divisor: RatPoly) -> RatPoly:
    quot, rem = divmod(p, divisor)
    if not rem.is_zero:
        raise NonPolynomialQuotient(f"({p}) is not divisible by ({divisor})")
    return quot


def cyclotomic_quotient(b_exponents, a_exponents, extra_unit_factors: int = 0) -> RatPoly:
    """prod_j (1 - t^(2b_j)) / ((1 - t)^extra * prod_i (1 - t^(2a_i))), exactly.

    Every factor 1 - t^k is cancelled as (1 - t) * (1 + t + ... + t^(k-1)), so
    the computation is a product of geometric sums followed by exact divisions
    by geometric sums; no power-series division happens anywhere.  Raises
    NonPolynomialQuotient when the quotient is not a polynomial.
    """
    bs = sorted(int(b) for b in b_exponents)
    as_ = sorted(int(a) for a in a_exponents)
    if any(b < 1 for b in bs) or any(a < 1 for a in as_):
        raise DomainError("exponents must be positive integers")
    if extra_unit_factors < 0:
        raise DomainError("extra_unit_factors must be non-negative")
    # (1 - t)^net_units remains upstairs after pairing each 1 - t^k with one unit.
    net_units = len(bs) - len(as_) - extra_unit_factors
    one_minus_t = RatPoly((1, -1))
    num = RatPoly.one()
    for b in bs:
        num = num * geometric_sum(2 * b)
    for _ in range(max(0, net_units)):
        num = num * one_minus_t
    result = num
    for a in as_:
        result = _exact_div(result, geometric_sum(2 * a))
    for _ in range(max(0, -net_units)):
        result = _exact_div(result, one_minus_t)
    return result


def sturm_chain(p: RatPoly) -> tuple[RatPoly, ...]:
    """Signed-remainder chain: p, p', then each entry the negated remainder
    of the two preceding, stopping before the zero remainder."""
    if p.is_zero:
        raise ZeroPolynomialError("no Sturm chain for the zero polynomial")
    chain = [p]
    nxt = p.derivative()
    while not nxt.is_zero:
        chain.append(nxt)
        _, rem = divmod(chain[-2], chain[-1])
        nxt = -rem
    return tuple(chain)


def sign_variations(values: Sequence[Fraction]) -> int:
    """Number of sign changes in a sequence, zeros ignored."""
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for i in range(len(signs) - 1) if signs[i] != signs[i + 1])


def _variations_at(chain: Sequence[RatPoly], x: Fraction) -> int:
    return sign_variations([f(x) for f in chain])


def _variations_at_infinity(chain: Sequence[RatPoly]) -> int:
    return sign_variations([f.leading_coefficient for f in chain])


@dataclass(frozen=True)
class SturmCertificate:
    """Certified count of distinct real roots of chain[0] in (lo, hi).

    hi=None encodes +infinity.  root_count is the sign-variation difference of
    the chain at the two endpoints; both endpoints must be non-roots.
    """

    chain: tuple[RatPoly, ...]
    lo: Fraction
    hi: Optional[Fraction]
    root_count: int


def count_distinct_roots(p: RatPoly, lo, hi=None) -> SturmCertificate:
    """Distinct real roots of p in the open interval (lo, hi); hi=None means +infinity."""
    lo = Fraction(lo)
    if p(lo) == 0:
        raise DomainError("Sturm count needs p(lo) != 0")
    if hi is not None:
        hi = Fraction(hi)
        if hi <= lo:
            raise DomainError("need lo < hi")
        if p(hi) == 0:
            raise DomainError("Sturm count needs p(hi) != 0")
    chain = sturm_chain(p)
    v_lo = _variations_at(chain, lo)
    v_hi = _variations_at_infinity(chain) if hi is None else _variations_at(chain, hi)
    return SturmCertificate(chain, lo, hi, v_lo - v_hi)


@dataclass(frozen=True)
class RayDecision:
    """Outcome of a strict-positivity query on [eps, infinity)."""

    positive: bool
    reason: str  # "leading-coefficient" | "endpoint" | "constant" | "sturm" | "subdivision"
    value_at_eps: Fraction
    leading_coefficient: Fraction
    certificate: Optional[SturmCertificate]


def _reversed_poly(p: RatPoly) -> RatPoly:
    # u^deg * p(1/u); positivity of p on [1, inf) equals positivity of this on (0, 1]
    return RatPoly(tuple(reversed(p.coeffs)))


def _subdivision_positive(p: RatPoly, lo: Fraction, hi: Fraction, budget: int) -> Optional[bool]:
    """Sound but incomplete sign decision for p on [lo, hi] with 0 <= lo <= hi.

    Monomials c*t^k are monotone on the non-negative axis, so
    sum(c>0 at lo) + sum(c<0 at hi) bounds the cell from below; cells failing
    the bound are probed exactly and bisected.  All arithmetic is integer
    (coefficients scaled by a common denominator, cell endpoints kept as
    numerators over a shared power-of-two denominator), so signs are exact.
    Returns None when the cell budget runs out (the caller falls back to a
    Sturm chain)."""
    scale = 1
    for c in p.coeffs:
        scale = scale * c.denominator // gcd(scale, c.denominator)
    terms = [(k, int(c * scale)) for k, c in enumerate(p.coeffs) if c]
    if not terms:
        return False
    pos = [(k, c) for k, c in terms if c > 0]
    neg = [(k, c) for k, c in terms if c < 0]
    top = terms[-1][0]
    if not neg:
        # nondecreasing on the non-negative axis: the left endpoint decides
        return p(lo) > 0

    def value(num: int, den: int) -> int:
        # integer with the sign of p(num/den)
        return sum(c * num ** k * den ** (top - k) for k, c in terms)

    den0 = lcm(lo.denominator, hi.denominator)
    stack = [(lo.numerator * (den0 // lo.denominator), hi.numerator * (den0 // hi.denominator), den0)]
    while stack:
        a, b, d = stack.pop()
        budget -= 1
        if budget < 0:
            return None
        lower = sum(c * a ** k * d ** (top - k) for k, c in pos) + sum(
            c * b ** k * d ** (top - k) for k, c in neg
        )
        if lower > 0:
            continue
        if value(a, d) <= 0 or value(b, d) <= 0 or value(a + b, 2 * d) <= 0:
            return False
        if a == b:
            continue  # exact point, already proved positive by the probes
        stack.append((a + b, 2 * b, 2 * d))
        stack.append((2 * a, a + b, 2 * d))
    return True


# Sturm chains are exact but quadratic in the degree with fast-growing
# coefficients; beyond this degree the subdivision accelerator runs first.
_STURM_DIRECT_LIMIT = 80
_SUBDIVISION_BUDGET = 4096


def _accelerated_ray_positive(p: RatPoly, eps: Fraction) -> Optional[bool]:
    # requires lc > 0 and p(eps) > 0, both already checked by the caller
    if all(c >= 0 for c in p.coeffs):
        return True
    if eps < 1:
        left = _subdivision_positive(p, eps, Fraction(1), _SUBDIVISION_BUDGET)
        if left is not True:
            return left if left is False else None
        tail = _subdivision_positive(_reversed_poly(p), Fraction(0), Fraction(1), _SUBDIVISION_BUDGET)
    else:
        tail = _subdivision_positive(_reversed_poly(p), Fraction(0), 1 / eps, _SUBDIVISION_BUDGET)
    return tail if tail is not None else None


def ray_decision(p: RatPoly, eps) -> RayDecision:
    """Decide p(t) > 0 for all t >= eps, exactly; strict at the endpoint.

    The decision is: positive leading coefficient, p(eps) > 0, and a zero
    root count on (eps, infinity).  Small degrees go straight to a Sturm
    chain; large ones first try an exact interval-subdivision certificate
    (everything stays in rational arithmetic) and fall back to Sturm only
    when that is inconclusive.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise DomainError("eps must be a positive rational")
    if p.is_zero:
        raise ZeroPolynomialError("positivity on a ray is undefined for the zero polynomial")
    lc = p.leading_coefficient
    val = p(eps)
    if lc <= 0:
        return RayDecision(False, "leading-coefficient", val, lc, None)
    if val <= 0:
        return RayDecision(False, "endpoint", val, lc, None)
    if p.degree == 0:
        return RayDecision(True, "constant", val, lc, None)
    if p.degree > _STURM_DIRECT_LIMIT:
        quick = _accelerated_ray_positive(p, eps)
        if quick is not None:
            return RayDecision(quick, "subdivision", val, lc, None)
    cert = count_distinct_roots(p, eps, None)
    return RayDecision(cert.root_count == 0, "sturm", val, lc, cert)


def positive_on_ray(p: RatPoly, eps) -> bool:
    """True iff p(t) > 0 for every real t >= eps (a root at eps counts as failure)."""
    return ray_decision(p, eps).positive
