"""Exact maximin-share (MMS) fairness toolkit for unequal entitlements.

Computes l-out-of-d maximin shares exactly, decides dominance between
share conditions, enumerates the minimal set of conditions to check for a
given entitlement, and evaluates the OMMS / WMMS / BMMS fairness criteria.
"""
from .core import (
    EntitlementVector,
    Instance,
    InstanceTooLargeError,
    MmsPair,
    PartitionAssignment,
    Rational,
    Value,
    canonicalize,
    parse_items,
    parse_rational,
    rational_floor_mul,
)
from .criteria import (
    AgentAudit,
    Allocation,
    FairnessReport,
    audit,
    bmms_value,
    is_omms_fair,
    omms_requirements,
    weighted_maximin_partition,
    wmms_value,
)
from .dominance import (
    Decomposition,
    bundle_size_reduction_applies,
    corollary_case,
    decompose,
    dominates,
    non_dominance_witness,
)
from .engine import (
    DEFAULT_LIMITS,
    MmsResult,
    SearchLimits,
    brute_force_mms,
    brute_force_mms_table,
    min_l_union,
    mms,
    mms_cardinality,
)
from .pairs import PairSet, Removal, candidate_pairs, filtration_trace, non_dominated_pairs
from .scan import ScanReport, ScanRow, notion_separation_scan, scan_one

__version__ = "0.1.0"

__all__ = [
    "AgentAudit",
    "Allocation",
    "DEFAULT_LIMITS",
    "Decomposition",
    "EntitlementVector",
    "FairnessReport",
    "Instance",
    "InstanceTooLargeError",
    "MmsPair",
    "MmsResult",
    "PairSet",
    "PartitionAssignment",
    "Rational",
    "Removal",
    "ScanReport",
    "ScanRow",
    "SearchLimits",
    "Value",
    "audit",
    "bmms_value",
    "brute_force_mms",
    "brute_force_mms_table",
    "bundle_size_reduction_applies",
    "canonicalize",
    "candidate_pairs",
    "corollary_case",
    "decompose",
    "dominates",
    "filtration_trace",
    "is_omms_fair",
    "min_l_union",
    "mms",
    "mms_cardinality",
    "non_dominance_witness",
    "non_dominated_pairs",
    "notion_separation_scan",
    "omms_requirements",
    "parse_items",
    "parse_rational",
    "rational_floor_mul",
    "scan_one",
    "weighted_maximin_partition",
    "wmms_value",
]
