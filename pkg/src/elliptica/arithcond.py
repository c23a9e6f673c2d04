"""Friedlander-Halperin arithmetic conditions (A.C. / S.A.C.) with witnesses.

A subsequence of the a-exponents is a subset of *indices*, so duplicate values
stay distinct columns; a pair like (B; (2, 2)) must cover two b's for the full
subsequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Optional, Sequence

from .modelspace import ExponentData

MODES = ("AC", "SAC")


def representable(target: int, gens: Sequence[int], min_terms: int = 2) -> Optional[tuple[int, ...]]:
    """A vector gamma of non-negative integers with
    sum(gamma[i] * gens[i]) == target and sum(gamma) >= min_terms, or None.

    Decided by a dynamic program over values 0..target whose state tracks the
    term count capped at min_terms; no gamma entry can exceed
    target // min(gens), so the search is finite.
    """
    if min_terms not in (1, 2):
        raise ValueError("min_terms must be 1 (A.C.) or 2 (S.A.C.)")
    if not gens:
        return None
    if target < 1:
        return None
    cap = min_terms
    # (value, min(terms, cap)) -> (previous value, previous terms, generator index)
    parent: dict[tuple[int, int], Optional[tuple[int, int, int]]] = {(0, 0): None}
    for value in range(target + 1):
        for terms in range(cap + 1):
            if (value, terms) not in parent:
                continue
            for i, g in enumerate(gens):
                nxt = (value + g, min(terms + 1, cap))
                if nxt[0] <= target and nxt not in parent:
                    parent[nxt] = (value, terms, i)
    state = (target, cap)
    if state not in parent:
        return None
    gamma = [0] * len(gens)
    while parent[state] is not None:
        value, terms, i = parent[state]
        gamma[i] += 1
        state = (value, terms)
    return tuple(gamma)


@dataclass(frozen=True)
class SubsetRecord:
    subset: tuple[int, ...]
    covered_b_indices: tuple[int, ...]
    witnesses: Mapping[int, tuple[int, ...]]


@dataclass(frozen=True)
class SacReport:
    mode: str
    holds: bool
    per_subset: tuple[SubsetRecord, ...]
    failing_subset: Optional[tuple[int, ...]]


def check_condition(data: ExponentData, mode: str = "SAC") -> SacReport:
    """Decide the (strong) arithmetic condition for (B; A).

    For every non-empty index subset A* of A of size s there must be at least
    s indices j with b_j = sum(gamma_i * a_i) over A*, gamma_i >= 0 integers,
    and sum(gamma) >= 2 in SAC mode (>= 1 in AC mode).  An empty A holds
    vacuously.  Subsets are processed by size then lexicographically, and the
    first failing one is reported.
    """
    mode = mode.upper()
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    min_terms = 2 if mode == "SAC" else 1
    a, b = data.a, data.b
    records: list[SubsetRecord] = []
    covered_by_subset: dict[tuple[int, ...], frozenset[int]] = {}
    failing: Optional[tuple[int, ...]] = None
    for size in range(1, len(a) + 1):
        for subset in combinations(range(len(a)), size):
            gens = [a[i] for i in subset]
            witnesses = {}
            for j, target in enumerate(b):
                gamma = representable(target, gens, min_terms)
                if gamma is not None:
                    witnesses[j] = gamma
            covered = tuple(sorted(witnesses))
            records.append(SubsetRecord(subset, covered, witnesses))
            covered_by_subset[subset] = frozenset(covered)
            if len(covered) < size and failing is None:
                failing = subset
    _assert_cover_monotone(covered_by_subset)
    return SacReport(mode, failing is None, tuple(records), failing)


def _assert_cover_monotone(covered_by_subset: Mapping[tuple[int, ...], frozenset[int]]) -> None:
    # A b covered over A* stays covered over any superset (pad gamma with zeros).
    for subset, covered in covered_by_subset.items():
        if len(subset) == 1:
            continue
        for i in subset:
            smaller = tuple(x for x in subset if x != i)
            if not covered_by_subset[smaller] <= covered:
                raise AssertionError(f"coverage not monotone between {smaller} and {subset}")


def double_exponent_check(data: ExponentData) -> bool:
    """b_i >= 2 a_i for i = 1..r with both lists sorted descending; False when q < r."""
    b = sorted(data.b, reverse=True)
    a = sorted(data.a, reverse=True)
    if len(b) < len(a):
        return False
    return all(bi >= 2 * ai for bi, ai in zip(b, a))
