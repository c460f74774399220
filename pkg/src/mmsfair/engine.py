"""Exact l-out-of-d maximin-share computation.

The share value is the maximum, over all partitions of the items into d
possibly-empty parts, of the sum of the l smallest part sums. `mms` runs
an exact depth-first search with symmetry breaking and a water-filling
upper bound; `brute_force_mms` is the deliberately dumb reference oracle
used by the tests; `mms_cardinality` is the closed form for identical
unit-valued items.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .core import (
    Instance,
    InstanceTooLargeError,
    MmsPair,
    PartitionAssignment,
    Value,
    canonicalize,
)


@dataclass(frozen=True, slots=True)
class SearchLimits:
    """Safety bounds for the exact search; exceeding them raises instead of hanging."""

    max_items: int = 16
    max_parts: int = 10


DEFAULT_LIMITS = SearchLimits()

ORACLE_MAX_ITEMS = 10
ORACLE_MAX_PARTS = 6


@dataclass(frozen=True, slots=True)
class MmsResult:
    """Share value together with a partition that attains it.

    The witness refers to the canonical (non-increasing) item order;
    summing its l smallest part sums reproduces `value`.
    """

    value: Value
    witness: PartitionAssignment


def min_l_union(part_sums: Sequence[Value], l: int) -> Value:
    """Sum of the l smallest entries: the worst union of l parts under an
    additive ordering."""
    if not 0 <= l <= len(part_sums):
        raise ValueError(f"need 0 <= l <= {len(part_sums)}, got l={l}")
    return sum(sorted(part_sums)[:l])


def _greedy_value(items: Sequence[Value], l: int, d: int) -> Value:
    # Longest-processing-time style start: feasible, so a lower bound.
    sums = [0] * d
    for v in items:
        sums[sums.index(min(sums))] += v
    return sum(sorted(sums)[:l])


def _upper_bound(sums: list[Value], rest: Value, l: int, d: int) -> Value:
    # Pouring the unassigned total fractionally onto the smallest parts
    # maximizes the sum of the l smallest; no integral completion beats it.
    asc = sorted(sums)
    prefix = 0
    for k in range(1, d + 1):
        prefix += asc[k - 1]
        if k == d or prefix + rest <= k * asc[k]:
            if k >= l:
                return l * (prefix + rest) // k
            # Water level settles below the k-th part: the poured total is
            # absorbed entirely by the l smallest parts.
            return prefix + rest + sum(asc[k:l])
    raise AssertionError("water level not found")


def mms(
    instance: Instance, pair: MmsPair, limits: SearchLimits = DEFAULT_LIMITS
) -> MmsResult:
    """Exact share value and witness partition.

    Deterministic: among optimal partitions, returns the lexicographically
    smallest assignment vector over canonical items, with parts numbered in
    order of first use. Raises InstanceTooLargeError beyond `limits`.
    """
    items = canonicalize(instance).items
    m, l, d = len(items), pair.l, pair.d
    if m > limits.max_items or d > limits.max_parts:
        raise InstanceTooLargeError(
            f"instance too large for exact search: {m} items into {d} parts "
            f"(limits: {limits.max_items} items, {limits.max_parts} parts)"
        )
    if l == 0:
        return MmsResult(0, PartitionAssignment((0,) * m, d))

    rest = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        rest[i] = rest[i + 1] + items[i]

    best_value = _greedy_value(items, l, d) - 1
    best_assign: tuple[int, ...] | None = None
    sums = [0] * d
    assign = [0] * m

    def dfs(i: int, opened: int) -> None:
        nonlocal best_value, best_assign
        if i == m:
            value = sum(sorted(sums)[:l])
            if value > best_value:
                best_value = value
                best_assign = tuple(assign)
            return
        if _upper_bound(sums, rest[i], l, d) <= best_value:
            return
        v = items[i]
        for k in range(min(opened + 1, d)):
            sums[k] += v
            assign[i] = k
            dfs(i + 1, opened + 1 if k == opened else opened)
            sums[k] -= v

    dfs(0, 0)
    assert best_assign is not None
    return MmsResult(best_value, PartitionAssignment(best_assign, d))


def brute_force_mms_table(instance: Instance, d: int) -> tuple[Value, ...]:
    """Share values for every l in 0..d by unpruned enumeration of all d**m
    part assignments. Reference oracle: small scale only."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    items = instance.items
    m = len(items)
    if m > ORACLE_MAX_ITEMS or d > ORACLE_MAX_PARTS:
        raise InstanceTooLargeError(
            f"brute-force oracle limited to {ORACLE_MAX_ITEMS} items and "
            f"{ORACLE_MAX_PARTS} parts, got {m} items into {d} parts"
        )
    best = [0] * (d + 1)
    for assign in itertools.product(range(d), repeat=m):
        sums = [0] * d
        for j, k in enumerate(assign):
            sums[k] += items[j]
        sums.sort()
        running = 0
        for l in range(1, d + 1):
            running += sums[l - 1]
            if running > best[l]:
                best[l] = running
    return tuple(best)


def brute_force_mms(instance: Instance, pair: MmsPair) -> Value:
    """Oracle twin of `mms(...).value`; same contract, no pruning."""
    return brute_force_mms_table(instance, pair.d)[pair.l]


def mms_cardinality(m: int, pair: MmsPair) -> int:
    """Share of m identical unit items, via the balanced-split closed form.

    The most balanced partition into d parts has r parts of size q - 1 and
    d - r parts of size q, where q = ceil(m / d) and r = q * d - m; the l
    smallest parts then hold q * l - min(l, r) items.
    """
    if m < 0:
        raise ValueError(f"item count must be non-negative, got {m}")
    if m == 0 or pair.l == 0:
        return 0
    q = -(-m // pair.d)
    r = q * pair.d - m
    return q * pair.l - min(pair.l, r)
