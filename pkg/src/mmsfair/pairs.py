"""Minimal set of share conditions for one entitlement.

Given an entitlement a and an item count m, build one candidate (l_d, d)
per d in 1..m with l_d the largest integer satisfying l_d / d <= a, then
drop every candidate dominated by another one. Checking the survivors is
equivalent to checking every pair with l/d <= a: larger part counts are
covered by the bundle-size reduction, dominated pairs by the survivors.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import MmsPair, rational_floor_mul
from .dominance import corollary_case, decompose, dominates


@dataclass(frozen=True, slots=True)
class PairSet:
    """Surviving conditions, sorted by d ascending."""

    pairs: tuple[MmsPair, ...]
    entitlement: Fraction
    item_count: int


@dataclass(frozen=True, slots=True)
class Removal:
    """One filtration step: `removed` is dominated by `by`, whose
    decomposition over removed.d is (q, r)."""

    removed: MmsPair
    by: MmsPair
    q: int
    r: int


def candidate_pairs(a: Fraction, m: int) -> list[MmsPair]:
    """One candidate (l_d, d) per d in 1..m; rejects m < 1 or a outside (0, 1]."""
    if m < 1:
        raise ValueError(f"item count must be at least 1, got {m}")
    return [MmsPair(rational_floor_mul(a, d), d) for d in range(1, m + 1)]


def _survivors(cands: list[MmsPair]) -> list[MmsPair]:
    # A candidate is dropped when another candidate dominates it strictly,
    # or mutually with a smaller d (mutual dominance means the share values
    # coincide on every instance, so the smallest d is kept as the
    # representative). Order independent.
    kept = []
    for p in cands:
        eliminated = any(
            dominates(q, p) and (not dominates(p, q) or q.d < p.d)
            for q in cands
            if q is not p
        )
        if not eliminated:
            kept.append(p)
    return kept


def non_dominated_pairs(a: Fraction, m: int) -> PairSet:
    """Candidates minus everything dominated by another candidate."""
    cands = candidate_pairs(a, m)
    return PairSet(tuple(_survivors(cands)), Fraction(a), m)


def _attribute(removed: MmsPair, survivors: list[MmsPair]) -> MmsPair:
    # Credit each removal to the smallest-d survivor whose dominance follows
    # from a shortcut rule; fall back to the smallest-d dominating survivor.
    # Every removed candidate is dominated by at least one survivor.
    doms = [s for s in survivors if s != removed and dominates(s, removed)]
    if removed.l >= 1:
        with_case = [
            s for s in doms if s.l >= 1 and corollary_case(s, removed) is not None
        ]
        if with_case:
            return with_case[0]
    return doms[0]


def filtration_trace(a: Fraction, m: int) -> list[Removal]:
    """Audit of every removal; candidates minus the removed entries equal
    the surviving PairSet."""
    cands = candidate_pairs(a, m)
    survivors = _survivors(cands)
    keep = set(survivors)
    trace = []
    for p in cands:
        if p in keep:
            continue
        by = _attribute(p, survivors)
        dec = decompose(by.d, p.d)
        trace.append(Removal(removed=p, by=by, q=dec.q, r=dec.r))
    return trace
