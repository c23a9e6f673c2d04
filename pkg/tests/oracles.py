"""Independent brute-force oracles used to cross-check the exact decision
procedures.  These deliberately share no code with the implementations they
check: sampling instead of Sturm chains, exhaustive search instead of dynamic
programming, box scans instead of pruned enumeration."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import ceil, lcm

from elliptica.exactpoly import RatPoly


def brute_positive_on_ray(p: RatPoly, eps) -> bool:
    """Dense rational sampling at step 1/64 on [eps, eps + deg*max|c| + 2]
    (stretched past the Cauchy root bound so the tail argument is sound),
    then the leading-coefficient sign for the tail."""
    eps = Fraction(eps)
    cs = p.coeffs
    if len(cs) <= 1:
        return bool(cs) and cs[0] > 0
    deg = len(cs) - 1
    lc = cs[-1]
    maxc = max(abs(c) for c in cs)
    end = eps + deg * maxc + 2
    cauchy = 1 + max(abs(c / lc) for c in cs[:-1])
    end = max(end, cauchy + 1)
    # scale to an integer polynomial in k where t = k/64, so only int ops run
    denom = lcm(*(c.denominator for c in cs))
    scaled = [int(c * denom) * 64 ** (deg - i) for i, c in enumerate(cs)]
    assert (64 * eps).denominator == 1, "oracle grid needs eps on the 1/64 lattice"
    k = int(64 * eps)
    k_end = ceil(64 * end)
    while k <= k_end:
        acc = 0
        for c in reversed(scaled):
            acc = acc * k + c
        if acc <= 0:
            return False
        k += 1
    return lc > 0


def brute_representable(target: int, gens, min_terms: int) -> bool:
    """Exhaustive depth-first search over all coefficient vectors."""

    def rec(i: int, remaining: int, terms: int) -> bool:
        if remaining == 0:
            return terms >= min_terms
        if i == len(gens):
            return False
        g = gens[i]
        return any(rec(i + 1, remaining - c * g, terms + c) for c in range(remaining // g + 1))

    return rec(0, target, 0)


def brute_condition_holds(b, a, mode: str) -> bool:
    """The subsequence-covering condition, decided purely by brute search."""
    min_terms = 2 if mode.upper() == "SAC" else 1
    for size in range(1, len(a) + 1):
        for subset in combinations(range(len(a)), size):
            gens = [a[i] for i in subset]
            covered = sum(1 for target in b if brute_representable(target, gens, min_terms))
            if covered < size:
                return False
    return True


def _ascending_tuples(values, max_len: int):
    out = [()]

    def rec(prefix, idx):
        if len(prefix) == max_len:
            return
        for j in range(idx, len(values)):
            cur = prefix + (values[j],)
            out.append(cur)
            rec(cur, j)

    rec((), 0)
    return out


def naive_sac_enumerate(max_formal_dim: int, b_max: int = 8, a_max: int = 4, len_max: int = 3):
    """Box scan with no pruning at all: every (b, a) pair in the box is tested
    by the brute-force condition and the n_X cap.  The box covers everything a
    correct census can emit for max_formal_dim <= 6."""
    pairs = []
    bs = [t for t in _ascending_tuples(range(2, b_max + 1), len_max) if t]
    as_ = _ascending_tuples(range(1, a_max + 1), len_max)
    for b in bs:
        for a in as_:
            n_x = sum(2 * x - 1 for x in b) - sum(2 * x - 1 for x in a)
            if n_x <= max_formal_dim and brute_condition_holds(b, a, "SAC"):
                pairs.append((n_x, len(b), b, a))
    pairs.sort()
    return [(b, a) for (_, _, b, a) in pairs]


def grid_min_difference(mh_eval, pi_eval, n: int, eps, rmax, step=Fraction(1, 8)):
    """Minimum of MH^n - n*MH^pi over the rational grid of the box [eps, rmax]^3.

    mh_eval/pi_eval are callables (t, u, v) -> Fraction."""
    eps, rmax = Fraction(eps), Fraction(rmax)
    best = None
    t = eps
    while t <= rmax:
        u = eps
        while u <= rmax:
            v = eps
            while v <= rmax:
                d = mh_eval(t, u, v) ** n - n * pi_eval(t, u, v)
                if best is None or d < best:
                    best = d
                v += step
            u += step
        t += step
    return best
