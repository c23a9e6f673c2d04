"""Stabilization thresholds pp(X; eps): the smallest n0 such that
n * P^pi(t) < P(t)^n holds on [eps, infinity) for every n >= n0.

The search evaluates n = 1, 2, ... with exact Sturm certificates and stops at
the first success at or beyond the tail constant N* = max(1, ceil(1/(P(eps)-1))).
From such an n the inequality propagates to n+1 because (n+1)/n <= P(eps) <=
P(t) for t >= eps (P has non-negative coefficients, so it is nondecreasing on
the positive axis); that one-line lemma is re-checked as an assertion at the
stopping point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

from .bounds import hilali_verdict
from .errors import CounterexampleFound, DomainError, NoExactHomology
from .exactpoly import RatPoly, RayDecision, positive_on_ray, ray_decision
from .modelspace import (
    ExponentData,
    SpaceExpr,
    exponent_data,
    homology_poincare_model,
    homology_poincare_pure,
    homotopy_poincare,
    render,
)

Source = Union[SpaceExpr, ExponentData]

_SEARCH_LIMIT = 10_000


def exact_poincare_pair(source: Source) -> tuple[RatPoly, RatPoly]:
    """(P, P^pi) when P is exactly determined: always for model expressions,
    and for raw exponent data only in the positively elliptic case q == r."""
    if isinstance(source, ExponentData):
        if source.q != source.r:
            raise NoExactHomology(
                "q > r exponent data does not determine P exactly; "
                "pass a model-space expression instead"
            )
        return homology_poincare_pure(source), homotopy_poincare(source)
    return homology_poincare_model(source), homotopy_poincare(exponent_data(source))


def power_inequality_holds(source: Source, n: int, eps) -> bool:
    """True iff n * P^pi(t) < P(t)^n for all t >= eps, decided exactly."""
    if n < 1:
        raise DomainError("n must be a positive integer")
    p, p_pi = exact_poincare_pair(source)
    return positive_on_ray(p ** n - p_pi * n, eps)


@dataclass(frozen=True)
class ThresholdResult:
    eps: Fraction
    threshold: int
    tail_constant: int
    per_n: Mapping[int, bool]
    certificates: Mapping[int, RayDecision]


def stabilization_threshold(source: Source, eps, *, hilali_guard: bool = True) -> ThresholdResult:
    """pp(source; eps) with per-n Sturm certificates.

    The point space is degenerate: 0 = n * P^pi < P^n = 1 for every n, so its
    threshold is 1.  With hilali_guard (default), a threshold of 4 or more at
    eps = 1 on data whose Hilali verdict is 'verified' raises
    CounterexampleFound: such a value would contradict the pp <= 3 theorem.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise DomainError("eps must be a positive rational")
    p, p_pi = exact_poincare_pair(source)
    if p == RatPoly.one():
        return ThresholdResult(eps, 1, 1, {1: True}, {})
    p_eps = p(eps)
    # constant term 1 plus at least one positive-degree term forces P(eps) > 1
    assert p_eps > 1
    n_star = max(1, math.ceil(Fraction(1, 1) / (p_eps - 1)))
    per_n: dict[int, bool] = {}
    certificates: dict[int, RayDecision] = {}
    last_fail = 0
    n = 0
    power = RatPoly.one()
    while True:
        n += 1
        if n > _SEARCH_LIMIT:
            raise RuntimeError("stabilization search did not terminate")
        power = power * p  # P^n, built incrementally
        decision = ray_decision(power - p_pi * n, eps)
        per_n[n] = decision.positive
        certificates[n] = decision
        if not decision.positive:
            last_fail = n
        elif n >= n_star:
            # monotone tail: from here (n+1) P^pi < ((n+1)/n) P^n <= P(eps) P^n <= P^(n+1)
            assert Fraction(n + 1, n) <= p_eps
            break
    threshold = last_fail + 1
    if hilali_guard and eps == 1 and threshold > 3 and _is_hilali_verified(source):
        label = render(source) if not isinstance(source, ExponentData) else repr(source)
        raise CounterexampleFound(
            f"pp({label}; 1) = {threshold} > 3 on Hilali-verified data; "
            "this would contradict the Hilali conjecture - report this input"
        )
    return ThresholdResult(eps, threshold, n_star, per_n, certificates)


def _is_hilali_verified(source: Source) -> bool:
    data = source if isinstance(source, ExponentData) else exponent_data(source)
    return hilali_verdict(data).kind == "verified"
