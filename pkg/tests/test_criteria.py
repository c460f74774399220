import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mmsfair.core import EntitlementVector, Instance, InstanceTooLargeError, MmsPair
from mmsfair.criteria import (
    Allocation,
    audit,
    bmms_value,
    is_omms_fair,
    omms_requirements,
    weighted_maximin_partition,
    wmms_value,
)
from mmsfair.engine import mms

TWO_ITEMS = Instance((40, 60))
INTRO = Instance((1, 3, 5, 6, 9))

small_instances = st.lists(st.integers(0, 9), max_size=6).map(
    lambda xs: Instance(tuple(xs))
)


def entitlement_vectors(n):
    # Random positive integer weights normalized to sum 1.
    return st.lists(st.integers(1, 6), min_size=n, max_size=n).map(
        lambda ws: EntitlementVector(tuple(Fraction(w, sum(ws)) for w in ws))
    )


def test_omms_requirements_examples():
    reqs = omms_requirements(INTRO, Fraction(2, 5))
    assert (MmsPair(1, 3), 7) in reqs

    assert omms_requirements(TWO_ITEMS, Fraction(3, 5)) == [(MmsPair(1, 2), 40)]

    low = omms_requirements(TWO_ITEMS, Fraction(2, 5))
    assert all(value == 0 for _, value in low)

    assert omms_requirements(Instance(()), Fraction(1, 2)) == []


def test_is_omms_fair_examples():
    assert is_omms_fair(INTRO, Fraction(2, 5), bundle_value=7)
    assert not is_omms_fair(INTRO, Fraction(2, 5), bundle_value=4)
    assert is_omms_fair(INTRO, Fraction(2, 5), bundle_value=INTRO.total())


def test_wmms_two_agent_split():
    t = EntitlementVector((Fraction(2, 5), Fraction(3, 5)))
    assert wmms_value(TWO_ITEMS, t, 0) == 40
    assert wmms_value(TWO_ITEMS, t, 1) == 60


def test_wmms_forced_empty_part_gives_zero():
    t = EntitlementVector((Fraction(3, 5), Fraction(1, 5), Fraction(1, 5)))
    for i in range(3):
        assert wmms_value(TWO_ITEMS, t, i) == 0


def test_wmms_rejects_bad_agent_index():
    t = EntitlementVector((Fraction(1, 2), Fraction(1, 2)))
    with pytest.raises(ValueError):
        wmms_value(TWO_ITEMS, t, 2)


def test_wmms_size_bound():
    t = EntitlementVector((Fraction(1, 2), Fraction(1, 2)))
    with pytest.raises(InstanceTooLargeError):
        wmms_value(Instance((1,) * 17), t, 0)


@settings(max_examples=60, deadline=None)
@given(small_instances, st.integers(1, 4))
def test_equal_entitlements_reduce_to_one_out_of_n(instance, n):
    t = EntitlementVector((Fraction(1, n),) * n)
    expected = mms(instance, MmsPair(1, n)).value
    for i in range(n):
        assert wmms_value(instance, t, i) == expected


def test_bmms_examples():
    assert bmms_value(TWO_ITEMS, Fraction(2, 5)) == 40
    assert bmms_value(TWO_ITEMS, Fraction(3, 5)) == 60
    assert bmms_value(Instance(()), Fraction(1, 3)) == 0
    assert bmms_value(TWO_ITEMS, Fraction(1)) == 100
    with pytest.raises(ValueError):
        bmms_value(TWO_ITEMS, Fraction(0))
    with pytest.raises(ValueError):
        bmms_value(TWO_ITEMS, Fraction(6, 5))


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.integers(0, 20), max_size=8),
    st.integers(2, 9).flatmap(
        lambda den: st.integers(1, den - 1).map(lambda num: Fraction(num, den))
    ),
)
def test_bmms_equals_wmms_for_two_agents(values, t1):
    instance = Instance(tuple(values))
    t = EntitlementVector((t1, 1 - t1))
    assert bmms_value(instance, t1) == wmms_value(instance, t, 0)
    assert bmms_value(instance, 1 - t1) == wmms_value(instance, t, 1)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(0, 9), max_size=5), entitlement_vectors(3))
def test_weighted_search_matches_unpruned_enumeration(values, t):
    from itertools import product

    instance = Instance(tuple(values))
    best = max(
        min(
            Fraction(sum(v for v, j in zip(values, assign) if j == agent), 1) / t[agent]
            for agent in range(3)
        )
        for assign in product(range(3), repeat=len(values))
    )
    ratio, _ = weighted_maximin_partition(instance, t.entitlements)
    assert ratio == best


@settings(max_examples=40, deadline=None)
@given(small_instances, entitlement_vectors(3))
def test_weighted_partition_feasibility(instance, t):
    # The argmax partition hands every agent at least its weighted share.
    ratio, assignment = weighted_maximin_partition(instance, t.entitlements)
    sums = assignment.part_sums(sorted(instance.items, reverse=True))
    for i, t_i in enumerate(t):
        assert sums[i] >= t_i * ratio


@settings(max_examples=30, deadline=None)
@given(small_instances, entitlement_vectors(2), st.integers(1, 4))
def test_values_scale_with_items(instance, t, c):
    scaled = Instance(tuple(v * c for v in instance.items))
    for i, t_i in enumerate(t):
        assert wmms_value(scaled, t, i) == c * wmms_value(instance, t, i)
        assert bmms_value(scaled, t_i) == c * bmms_value(instance, t_i)
    low = {p: v for p, v in omms_requirements(instance, t[0])}
    high = {p: v for p, v in omms_requirements(scaled, t[0])}
    assert high == {p: c * v for p, v in low.items()}


def test_allocation_validation():
    alloc = Allocation.from_lists([[0], [1]])
    alloc.validate_for(TWO_ITEMS)
    with pytest.raises(ValueError):
        Allocation.from_lists([[0], [0, 1]]).validate_for(TWO_ITEMS)
    with pytest.raises(ValueError):
        Allocation.from_lists([[0], []]).validate_for(TWO_ITEMS)
    with pytest.raises(ValueError):
        Allocation.from_lists([[0], [1, 2]]).validate_for(TWO_ITEMS)


def test_audit_intro_allocation_is_omms_fair():
    t = EntitlementVector((Fraction(2, 5), Fraction(3, 5)))
    # Item values (1, 3, 5, 6, 9): bundles {1, 6} and {3, 5, 9} by value.
    alloc = Allocation.from_lists([[0, 3], [1, 2, 4]])
    report = audit(INTRO, t, alloc)
    assert all(agent.omms_ok for agent in report.agents)


def test_audit_unbalanced_entitlements_split():
    t = EntitlementVector((Fraction(3, 5), Fraction(1, 5), Fraction(1, 5)))
    alloc = Allocation.from_lists([[], [0], [1]])
    report = audit(TWO_ITEMS, t, alloc)
    assert all(agent.wmms_ok for agent in report.agents)
    assert not report.agents[0].omms_ok
    assert report.agents[1].omms_ok and report.agents[2].omms_ok
    assert report.all_ok(["wmms"])
    assert not report.all_ok(["omms", "wmms"])


def test_audit_proportional_split_passes_everything():
    t = EntitlementVector((Fraction(2, 5), Fraction(3, 5)))
    report = audit(TWO_ITEMS, t, Allocation.from_lists([[0], [1]]))
    assert report.all_ok()


def test_audit_single_agent_everything():
    t = EntitlementVector((Fraction(1),))
    report = audit(TWO_ITEMS, t, Allocation.from_lists([[0, 1]]))
    assert report.all_ok()


def test_audit_dimension_mismatch():
    t = EntitlementVector((Fraction(1),))
    with pytest.raises(ValueError):
        audit(TWO_ITEMS, t, Allocation.from_lists([[0], [1]]))
    with pytest.raises(ValueError):
        audit(TWO_ITEMS, t, Allocation.from_lists([[0]]))


def test_audit_report_all_ok_rejects_unknown_criterion():
    t = EntitlementVector((Fraction(1),))
    report = audit(TWO_ITEMS, t, Allocation.from_lists([[0, 1]]))
    with pytest.raises(ValueError):
        report.all_ok(["omms", "envy"])


def test_audit_verdicts_monotone_in_bundle():
    # Moving an item into an agent's bundle never flips that agent fair -> unfair.
    rng = random.Random(99)
    instance = Instance((4, 1, 7, 2, 3))
    t = EntitlementVector((Fraction(1, 4), Fraction(3, 4)))
    for _ in range(20):
        owner = [rng.randint(0, 1) for _ in range(5)]
        bundles = [[i for i in range(5) if owner[i] == j] for j in range(2)]
        report = audit(instance, t, Allocation.from_lists(bundles))
        others = bundles[1]
        if not others:
            continue
        moved = others[rng.randrange(len(others))]
        grown = [bundles[0] + [moved], [i for i in others if i != moved]]
        grown_report = audit(instance, t, Allocation.from_lists(grown))
        before, after = report.agents[0], grown_report.agents[0]
        for name in ("omms_ok", "wmms_ok", "bmms_ok"):
            if getattr(before, name):
                assert getattr(after, name)
