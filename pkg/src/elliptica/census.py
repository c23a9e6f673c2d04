"""Canonical enumeration of all S.A.C.-admissible exponent data up to a
formal-dimension cap, with every invariant and bound evaluated.

The search space is pruned only by inequalities that are theorems for
admissible data (n_X >= sum b, n_X >= sum 2a, n_X >= q + r, b_i >= 2 a_i in
descending pairing); each surviving candidate is then decided exactly by
check_condition.  The emitted order is (n_X, q, b, a) and is independent of
the worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Mapping, Optional

from .arithcond import SacReport, check_condition
from .bounds import BoundsReport, HilaliVerdict, bounds_report, hilali_verdict, inequality_suite
from .errors import CapExceeded, CounterexampleFound
from .modelspace import ExponentData, InvariantReport, formal_dimension, invariants

FORMAL_DIM_CAP = 24


@dataclass(frozen=True)
class CensusEntry:
    data: ExponentData
    invariants: InvariantReport
    sac: SacReport
    bounds: BoundsReport
    verdict: HilaliVerdict


def _b_multisets(max_sum: int) -> Iterator[tuple[int, ...]]:
    """Non-empty ascending tuples with entries >= 2 and sum <= max_sum."""

    def rec(prefix: tuple[int, ...], start: int, budget: int) -> Iterator[tuple[int, ...]]:
        for v in range(start, budget + 1):
            cur = prefix + (v,)
            yield cur
            yield from rec(cur, v, budget - v)

    yield from rec((), 2, max_sum)


def _a_multisets(max_len: int, max_entry: int, max_sum: int) -> Iterator[tuple[int, ...]]:
    """Ascending tuples (possibly empty) with entries in 1..max_entry,
    length <= max_len and sum <= max_sum."""

    def rec(prefix: tuple[int, ...], start: int, budget: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == max_len:
            return
        for v in range(start, min(max_entry, budget) + 1):
            cur = prefix + (v,)
            yield cur
            yield from rec(cur, v, budget - v)

    yield ()
    if max_len > 0 and max_entry > 0:
        yield from rec((), 1, max_sum)


def _pairing_ok(b: tuple[int, ...], a: tuple[int, ...]) -> bool:
    # largest a against largest b, and so on (the b_i >= 2 a_i corollary)
    q, r = len(b), len(a)
    if r > q:
        return False
    return all(b[q - 1 - i] >= 2 * a[r - 1 - i] for i in range(r))


def candidate_data(max_formal_dim: int) -> list[ExponentData]:
    """Pruned canonical candidates, sorted by (n_X, q, b, a); S.A.C. not yet checked."""
    out = []
    for b in _b_multisets(max_formal_dim):
        q = len(b)
        sum_b = sum(b)
        n_base = 2 * sum_b - q  # n_X with empty a
        a_budget = (n_base - sum_b + q) // 2  # from n_X >= sum(b)
        for a in _a_multisets(q, max(b) // 2, max(0, a_budget)):
            r = len(a)
            n_x = n_base - (2 * sum(a) - r)
            if n_x > max_formal_dim:
                continue
            if n_x < sum_b or n_x < 2 * sum(a) or n_x < q + r:
                continue
            if not _pairing_ok(b, a):
                continue
            out.append(ExponentData(b, a))
    out.sort(key=lambda d: (formal_dimension(d), d.q, d.b, d.a))
    return out


def build_entry(data: ExponentData) -> Optional[CensusEntry]:
    """Full census record for one datum, or None when S.A.C. fails.

    A pure_fail verdict aborts loudly: it would contradict the known
    verification range of the Hilali conjecture and must never pass silently.
    """
    sac = check_condition(data, "SAC")
    if not sac.holds:
        return None
    inv = invariants(data)
    bnd = bounds_report(data, sac_holds=True)
    verdict = hilali_verdict(data, sac=sac, bounds=bnd)
    if verdict.kind == "pure_fail":
        raise CounterexampleFound(
            f"census datum b={list(data.b)}, a={list(data.a)} has "
            f"dim_pi={verdict.dim_pi} > dim_H={verdict.dim_h}; "
            "this contradicts the verified range of the Hilali conjecture - "
            "report this input"
        )
    return CensusEntry(data, inv, sac, bnd, verdict)


def enumerate_sac(max_formal_dim: int, threads: int = 1) -> list[CensusEntry]:
    """Every admissible exponent datum with n_X <= max_formal_dim, exactly
    once, ordered by (n_X, q, b, a).  The point space is excluded."""
    if max_formal_dim > FORMAL_DIM_CAP:
        raise CapExceeded(f"max_formal_dim {max_formal_dim} exceeds the cap {FORMAL_DIM_CAP}")
    cands = candidate_data(max_formal_dim)
    if threads <= 1:
        entries = [e for e in map(build_entry, cands) if e is not None]
    else:
        # partition by the largest b-value; merge is a deterministic re-sort
        buckets: dict[int, list[ExponentData]] = {}
        for d in cands:
            buckets.setdefault(d.b[-1], []).append(d)
        ordered = [buckets[k] for k in sorted(buckets)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = pool.map(lambda ds: [build_entry(d) for d in ds], ordered)
        entries = [e for chunk in chunks for e in chunk if e is not None]
        entries.sort(key=lambda e: (e.invariants.formal_dim, e.data.q, e.data.b, e.data.a))
    return entries


@dataclass(frozen=True)
class CensusSummary:
    max_formal_dim: int
    total: int
    by_formal_dim: Mapping[int, int]
    by_qr: Mapping[tuple[int, int], int]
    verified: int
    bounds_consistent: int
    pure_fail: int
    inequality_failures: tuple[str, ...]
    ordering_violations: tuple[str, ...]


def census_report(max_formal_dim: int, threads: int = 1) -> CensusSummary:
    """Aggregate counts plus any inequality or bound-ordering violations
    (both lists must be empty for a healthy census)."""
    entries = enumerate_sac(max_formal_dim, threads=threads)
    by_dim: dict[int, int] = {}
    by_qr: dict[tuple[int, int], int] = {}
    verified = consistent = 0
    ineq_failures: list[str] = []
    ordering: list[str] = []
    for e in entries:
        by_dim[e.invariants.formal_dim] = by_dim.get(e.invariants.formal_dim, 0) + 1
        key = (e.data.q, e.data.r)
        by_qr[key] = by_qr.get(key, 0) + 1
        if e.verdict.kind == "verified":
            verified += 1
        elif e.verdict.kind == "bounds_consistent":
            consistent += 1
        for check in inequality_suite(e.data):
            if not check.holds:
                ineq_failures.append(f"b={list(e.data.b)},a={list(e.data.a)}: {check.name}")
        for name in e.bounds.ordering_violations:
            ordering.append(f"b={list(e.data.b)},a={list(e.data.a)}: {name}")
    return CensusSummary(
        max_formal_dim=max_formal_dim,
        total=len(entries),
        by_formal_dim=dict(sorted(by_dim.items())),
        by_qr=dict(sorted(by_qr.items())),
        verified=verified,
        bounds_consistent=consistent,
        pure_fail=0,  # build_entry aborts before a pure_fail can be emitted
        inequality_failures=tuple(ineq_failures),
        ordering_violations=tuple(ordering),
    )
