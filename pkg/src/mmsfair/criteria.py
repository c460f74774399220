"""Fairness criteria for agents with unequal entitlements.

Three notions are evaluated exactly:

- OMMS: the bundle must be at least every l-out-of-d share with l/d at
  most the agent's entitlement; reduced to finitely many checks via the
  non-dominated pair set.
- WMMS: entitlement times the best achievable min over agents of
  V(part_j) / t_j across partitions into one labeled part per agent.
- BMMS: the bipartite variant, splitting the items between the agent
  (weight t_i) and everyone else (weight 1 - t_i).

WMMS and BMMS values are exact rationals. BMMS deliberately uses a
subset-sum enumeration rather than the labeled-partition search, so the
two routes cross-check each other where they must agree.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import (
    EntitlementVector,
    Instance,
    InstanceTooLargeError,
    MmsPair,
    PartitionAssignment,
    Value,
    canonicalize,
)
from .engine import DEFAULT_LIMITS, SearchLimits, mms
from .pairs import non_dominated_pairs


def omms_requirements(
    instance: Instance, a: Fraction, limits: SearchLimits = DEFAULT_LIMITS
) -> list[tuple[MmsPair, Value]]:
    """The finitely many (condition, share value) checks equivalent to
    "at least the l-out-of-d share for every l/d <= a"."""
    m = len(instance)
    if m == 0:
        return []
    pair_set = non_dominated_pairs(a, m)
    return [(p, mms(instance, p, limits).value) for p in pair_set.pairs]


def is_omms_fair(
    instance: Instance,
    a: Fraction,
    bundle_value: Value,
    limits: SearchLimits = DEFAULT_LIMITS,
) -> bool:
    return all(bundle_value >= value for _, value in omms_requirements(instance, a, limits))


def weighted_maximin_partition(
    instance: Instance,
    entitlements: Sequence[Fraction],
    limits: SearchLimits = DEFAULT_LIMITS,
) -> tuple[Fraction, PartitionAssignment]:
    """Maximize min_j V(part_j) / t_j over partitions into one labeled part
    per agent; returns the best ratio and an argmax assignment.

    Parts are labeled by agent, so parts are interchangeable only between
    agents with identical entitlements; symmetry breaking is applied inside
    those groups and nowhere else. The assignment refers to canonical
    (non-increasing) item order and is deterministic.
    """
    n = len(entitlements)
    if n < 1:
        raise ValueError("at least one agent is required")
    for t in entitlements:
        if t <= 0:
            raise ValueError(f"entitlements must be positive, got {t}")
    items = canonicalize(instance).items
    m = len(items)
    if m > limits.max_items or n > limits.max_parts:
        raise InstanceTooLargeError(
            f"instance too large for exact search: {m} items into {n} parts "
            f"(limits: {limits.max_items} items, {limits.max_parts} parts)"
        )

    same_t_before = [
        [j2 for j2 in range(j) if entitlements[j2] == entitlements[j]]
        for j in range(n)
    ]
    sums = [0] * n
    counts = [0] * n
    assign = [0] * m
    best_ratio: Fraction | None = None
    best_assign: tuple[int, ...] | None = None

    def dfs(i: int, rest: Value) -> None:
        nonlocal best_ratio, best_assign
        if i == m:
            ratio = min(s / t for s, t in zip(sums, entitlements))
            if best_ratio is None or ratio > best_ratio:
                best_ratio = ratio
                best_assign = tuple(assign)
            return
        if best_ratio is not None:
            bound = min((s + rest) / t for s, t in zip(sums, entitlements))
            if bound <= best_ratio:
                return
        v = items[i]
        for j in range(n):
            if counts[j] == 0 and any(counts[j2] == 0 for j2 in same_t_before[j]):
                continue
            sums[j] += v
            counts[j] += 1
            assign[i] = j
            dfs(i + 1, rest - v)
            sums[j] -= v
            counts[j] -= 1

    dfs(0, sum(items))
    assert best_ratio is not None and best_assign is not None
    return Fraction(best_ratio), PartitionAssignment(best_assign, n)


def wmms_value(
    instance: Instance,
    t: EntitlementVector,
    i: int,
    limits: SearchLimits = DEFAULT_LIMITS,
) -> Fraction:
    """Weighted share of agent i: t_i times the best achievable
    min_j V(part_j) / t_j."""
    if not 0 <= i < len(t):
        raise ValueError(f"agent index {i} outside 0..{len(t) - 1}")
    best, _ = weighted_maximin_partition(instance, t.entitlements, limits)
    return t[i] * best


def _subset_sums(items: Sequence[Value]) -> set[Value]:
    sums = {0}
    for v in items:
        sums |= {s + v for s in sums}
    return sums


def bmms_value(
    instance: Instance, t_i: Fraction, limits: SearchLimits = DEFAULT_LIMITS
) -> Fraction:
    """Bipartite weighted share: t_i times the best achievable
    min(V(X) / t_i, V(rest) / (1 - t_i)) over two-way splits.

    t_i = 1 is the degenerate whole-set split and evaluates to the total.
    """
    if not 0 < t_i <= 1:
        raise ValueError(f"entitlement must satisfy 0 < t_i <= 1, got {t_i}")
    if len(instance) > limits.max_items:
        raise InstanceTooLargeError(
            f"instance too large for exact search: {len(instance)} items "
            f"(limit: {limits.max_items})"
        )
    total = instance.total()
    if t_i == 1:
        return Fraction(total)
    rest_t = 1 - t_i
    best = Fraction(0)
    for s in _subset_sums(instance.items):
        candidate = min(s / t_i, (total - s) / rest_t)
        if candidate > best:
            best = candidate
    return t_i * best


@dataclass(frozen=True, slots=True)
class Allocation:
    """Item indices split into one bundle per agent; empty bundles allowed."""

    bundles: tuple[frozenset[int], ...]

    @classmethod
    def from_lists(cls, lists: Sequence[Sequence[int]]) -> "Allocation":
        return cls(tuple(frozenset(int(i) for i in b) for b in lists))

    def validate_for(self, instance: Instance) -> None:
        seen: set[int] = set()
        for bundle in self.bundles:
            overlap = bundle & seen
            if overlap:
                raise ValueError(f"item indices assigned twice: {sorted(overlap)}")
            seen |= bundle
        expected = set(range(len(instance)))
        if seen != expected:
            raise ValueError(
                "allocation must cover every item index exactly once; "
                f"got {sorted(seen)}, expected {sorted(expected)}"
            )

    def bundle_value(self, instance: Instance, i: int) -> Value:
        return sum(instance.items[j] for j in self.bundles[i])


@dataclass(frozen=True, slots=True)
class AgentAudit:
    agent: int
    bundle_value: Value
    omms_requirements: tuple[tuple[MmsPair, Value], ...]
    omms_ok: bool
    wmms_value: Fraction
    wmms_ok: bool
    bmms_value: Fraction
    bmms_ok: bool


@dataclass(frozen=True, slots=True)
class FairnessReport:
    agents: tuple[AgentAudit, ...]

    def all_ok(self, criteria: Sequence[str] = ("omms", "wmms", "bmms")) -> bool:
        for name in criteria:
            if name not in ("omms", "wmms", "bmms"):
                raise ValueError(f"unknown criterion {name!r}")
        return all(
            getattr(agent, f"{name}_ok") for agent in self.agents for name in criteria
        )


def audit(
    instance: Instance,
    t: EntitlementVector,
    alloc: Allocation,
    limits: SearchLimits = DEFAULT_LIMITS,
) -> FairnessReport:
    """Per-agent verdicts for all three criteria on one allocation."""
    if len(alloc.bundles) != len(t):
        raise ValueError(
            f"allocation has {len(alloc.bundles)} bundles for {len(t)} agents"
        )
    alloc.validate_for(instance)
    best_ratio, _ = weighted_maximin_partition(instance, t.entitlements, limits)
    audits = []
    for i, t_i in enumerate(t):
        value = alloc.bundle_value(instance, i)
        requirements = tuple(omms_requirements(instance, t_i, limits))
        wmms = t_i * best_ratio
        bmms = bmms_value(instance, t_i, limits)
        audits.append(
            AgentAudit(
                agent=i,
                bundle_value=value,
                omms_requirements=requirements,
                omms_ok=all(value >= req for _, req in requirements),
                wmms_value=wmms,
                wmms_ok=value >= wmms,
                bmms_value=bmms,
                bmms_ok=value >= bmms,
            )
        )
    return FairnessReport(tuple(audits))
