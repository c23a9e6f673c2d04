"""Model spaces (spheres, complex projective spaces, products), their exponent
data, and the basic numerical invariants derived from it."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import groupby
from math import prod
from typing import Iterable, Optional, Union

from .errors import DomainError, NonIntegerChi, ParseError, PurityError
from .exactpoly import RatPoly, cyclotomic_quotient


@dataclass(frozen=True)
class Sphere:
    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise DomainError(f"S{self.n} is not a simply connected model space")


@dataclass(frozen=True)
class Projective:
    m: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise DomainError(f"CP{self.m} is not a valid model space")


Leaf = Union[Sphere, Projective]


@dataclass(frozen=True)
class Product:
    children: tuple[Leaf, ...]

    def __post_init__(self) -> None:
        if len(self.children) < 2:
            raise ValueError("Product needs at least two factors; use product()")
        if not all(isinstance(c, (Sphere, Projective)) for c in self.children):
            raise ValueError("Product children must be leaves; use product() to flatten")


SpaceExpr = Union[Sphere, Projective, Product]


def leaves(expr: SpaceExpr) -> tuple[Leaf, ...]:
    if isinstance(expr, (Sphere, Projective)):
        return (expr,)
    if isinstance(expr, Product):
        return expr.children
    raise TypeError(f"not a SpaceExpr: {expr!r}")


def product(factors: Iterable[SpaceExpr]) -> SpaceExpr:
    """Flatten into a normalized product; a single factor collapses to itself."""
    ls: list[Leaf] = []
    for f in factors:
        ls.extend(leaves(f))
    if not ls:
        raise ValueError("empty product")
    return ls[0] if len(ls) == 1 else Product(tuple(ls))


def power(expr: SpaceExpr, k: int) -> SpaceExpr:
    """k-fold product; power(e, 1) is e itself."""
    if k < 1:
        raise DomainError("power must be at least 1")
    return product(leaves(expr) * k)


def render(expr: SpaceExpr) -> str:
    """Canonical text form, grouping adjacent equal factors: 'S4 x CP2^3'."""
    parts = []
    for leaf, run in groupby(leaves(expr)):
        count = sum(1 for _ in run)
        name = f"S{leaf.n}" if isinstance(leaf, Sphere) else f"CP{leaf.m}"
        parts.append(name if count == 1 else f"{name}^{count}")
    return " x ".join(parts)


class _Scanner:
    """Characters of the input with whitespace removed, original positions kept."""

    def __init__(self, text: str):
        self.items = [(ch, i) for i, ch in enumerate(text) if not ch.isspace()]
        self.end = len(text)
        self.k = 0

    def peek(self) -> Optional[str]:
        return self.items[self.k][0] if self.k < len(self.items) else None

    def pos(self) -> int:
        return self.items[self.k][1] if self.k < len(self.items) else self.end

    def advance(self) -> str:
        ch = self.items[self.k][0]
        self.k += 1
        return ch


def _parse_int(sc: _Scanner) -> int:
    digits = ""
    while (ch := sc.peek()) is not None and ch.isdigit():
        digits += sc.advance()
    if not digits:
        raise ParseError("expected an integer", sc.pos())
    return int(digits)


def _parse_atom(sc: _Scanner) -> SpaceExpr:
    ch = sc.peek()
    if ch is None:
        raise ParseError("expected 'S<n>', 'CP<m>' or '('", sc.pos())
    if ch == "(":
        sc.advance()
        expr = _parse_product(sc)
        if sc.peek() != ")":
            raise ParseError("expected ')'", sc.pos())
        sc.advance()
        return expr
    low = ch.lower()
    if low == "s":
        sc.advance()
        return Sphere(_parse_int(sc))
    if low == "c":
        sc.advance()
        if sc.peek() is None or sc.peek().lower() != "p":
            raise ParseError("expected 'CP'", sc.pos())
        sc.advance()
        return Projective(_parse_int(sc))
    raise ParseError(f"unexpected {ch!r}; expected 'S<n>', 'CP<m>' or '('", sc.pos())


def _parse_term(sc: _Scanner) -> SpaceExpr:
    atom = _parse_atom(sc)
    if sc.peek() == "^":
        sc.advance()
        pos = sc.pos()
        k = _parse_int(sc)
        if k < 1:
            raise ParseError("power must be at least 1", pos)
        return power(atom, k)
    return atom


def _parse_product(sc: _Scanner) -> SpaceExpr:
    factors = [_parse_term(sc)]
    while (ch := sc.peek()) is not None and ch.lower() == "x":
        sc.advance()
        factors.append(_parse_term(sc))
    return product(factors)


def parse_space(text: str) -> SpaceExpr:
    """Parse 'S4 x CP2^3'-style expressions into a normalized SpaceExpr.

    Grammar: expr := term ('x' term)*; term := atom ['^' INT];
    atom := 'S' INT | 'CP' INT | '(' expr ')'.  Whitespace and case are
    ignored.  Raises ParseError with a position, or DomainError for spaces
    outside the simply connected range (S0, S1, CP0).
    """
    sc = _Scanner(text)
    expr = _parse_product(sc)
    if sc.peek() is not None:
        raise ParseError(f"unexpected trailing {sc.peek()!r}", sc.pos())
    return expr


@dataclass(frozen=True)
class ExponentData:
    """Multisets of b-exponents (odd part, entries >= 2) and a-exponents
    (even part, entries >= 1), stored sorted ascending."""

    b: tuple[int, ...] = ()
    a: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        b = tuple(sorted(int(x) for x in self.b))
        a = tuple(sorted(int(x) for x in self.a))
        if any(x < 2 for x in b):
            raise DomainError("b-exponents must be >= 2 (odd degrees 2b-1 >= 3)")
        if any(x < 1 for x in a):
            raise DomainError("a-exponents must be >= 1")
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "a", a)

    @property
    def q(self) -> int:
        return len(self.b)

    @property
    def r(self) -> int:
        return len(self.a)


def exponent_data(expr: SpaceExpr) -> ExponentData:
    """Exponents of a model space: S^{2k} gives b=2k, a=k; S^{2k+1} gives
    b=k+1; CP^m gives b=m+1, a=1; products concatenate."""
    b: list[int] = []
    a: list[int] = []
    for leaf in leaves(expr):
        if isinstance(leaf, Sphere):
            if leaf.n % 2 == 0:
                b.append(leaf.n)
                a.append(leaf.n // 2)
            else:
                b.append((leaf.n + 1) // 2)
        else:
            b.append(leaf.m + 1)
            a.append(1)
    return ExponentData(tuple(b), tuple(a))


def homotopy_poincare(data: ExponentData) -> RatPoly:
    """P^pi(t) = sum_i t^(2a_i) + sum_j t^(2b_j - 1), with multiplicities."""
    top = max([2 * b - 1 for b in data.b] + [2 * a for a in data.a], default=-1)
    coeffs = [Fraction(0)] * (top + 1)
    for a in data.a:
        coeffs[2 * a] += 1
    for b in data.b:
        coeffs[2 * b - 1] += 1
    return RatPoly(tuple(coeffs))


def sphere_poincare(n: int) -> RatPoly:
    """1 + t^n."""
    return RatPoly((1,) + (0,) * (n - 1) + (1,))


def projective_poincare(m: int) -> RatPoly:
    """1 + t^2 + ... + t^(2m)."""
    return RatPoly(tuple(Fraction(1 - k % 2) for k in range(2 * m + 1)))


def homology_poincare_model(expr: SpaceExpr) -> RatPoly:
    """Product of the factor Poincare polynomials (homology is multiplicative)."""
    result = RatPoly.one()
    for leaf in leaves(expr):
        factor = sphere_poincare(leaf.n) if isinstance(leaf, Sphere) else projective_poincare(leaf.m)
        result = result * factor
    return result


def homology_poincare_pure(data: ExponentData) -> RatPoly:
    """P(t) = prod(1 - t^(2b)) / prod(1 - t^(2a)) in the positively elliptic
    case q == r; PurityError otherwise."""
    if data.q != data.r:
        raise PurityError(f"need |b| == |a|, got q={data.q}, r={data.r}")
    return cyclotomic_quotient(data.b, data.a, 0)


@dataclass(frozen=True)
class InvariantReport:
    q: int
    r: int
    dim_pi: int
    formal_dim: int
    chi_pi: int
    chi: int
    dim_h: Optional[int]


def formal_dimension(data: ExponentData) -> int:
    """n_X = sum(2b_j - 1) - sum(2a_i - 1)."""
    return sum(2 * b - 1 for b in data.b) - sum(2 * a - 1 for a in data.a)


def invariants(data: ExponentData) -> InvariantReport:
    """q, r, dim_pi = q + r, n_X, chi_pi = r - q, and chi.

    chi is prod(b)/prod(a) when q == r (must be an integer, else NonIntegerChi)
    and 0 when q > r.  dim_h is reported only when exactly computable (q == r).
    """
    q, r = data.q, data.r
    n_x = formal_dimension(data)
    chi_pi = r - q
    if q == r:
        ratio = Fraction(prod(data.b), prod(data.a))
        if ratio.denominator != 1:
            raise NonIntegerChi(f"prod(b)/prod(a) = {ratio} is not an integer for {data}")
        chi = int(ratio)
        dim_h = int(homology_poincare_pure(data)(1))
        assert dim_h == chi  # telescoping identity P(1) = prod(b)/prod(a)
    else:
        chi = 0
        dim_h = None
    return InvariantReport(q, r, q + r, n_x, chi_pi, chi, dim_h)
