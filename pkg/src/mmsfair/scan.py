"""Empirical comparison of the three fairness notions over small grids.

For each (instance, entitlement vector) combination the scan records the
per-agent OMMS requirement maximum, the WMMS value, and the BMMS value,
and flags where one notion is strictly stronger than another. The claim
that BMMS-fairness implies the other two is only ever reported as
"counterexample found" or "none found at this scale", never asserted.
"""
from __future__ import annotations

import csv
import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Sequence

from .core import EntitlementVector, Instance, Value
from .criteria import bmms_value, omms_requirements, weighted_maximin_partition
from .engine import DEFAULT_LIMITS, SearchLimits


@dataclass(frozen=True, slots=True)
class ScanRow:
    items: tuple[Value, ...]
    entitlements: tuple[Fraction, ...]
    omms_max: tuple[Value, ...]
    wmms: tuple[Fraction, ...]
    bmms: tuple[Fraction, ...]
    # Agent indices where one requirement strictly exceeds another.
    wmms_stronger: tuple[int, ...]
    omms_stronger: tuple[int, ...]
    bmms_below_wmms: tuple[int, ...]
    bmms_below_omms: tuple[int, ...]

    @property
    def equal_entitlements(self) -> bool:
        return len(set(self.entitlements)) == 1

    @property
    def omms_wmms_coincide(self) -> bool:
        return all(o == w for o, w in zip(self.omms_max, self.wmms))


@dataclass(frozen=True, slots=True)
class ScanReport:
    rows: tuple[ScanRow, ...]
    seed: int

    def conjecture_counterexamples(self) -> list[ScanRow]:
        """Rows where a BMMS-fair bundle could fail WMMS or OMMS."""
        return [r for r in self.rows if r.bmms_below_wmms or r.bmms_below_omms]

    def summary(self) -> dict:
        return {
            "rows": len(self.rows),
            "rows_wmms_strictly_stronger": sum(1 for r in self.rows if r.wmms_stronger),
            "rows_omms_strictly_stronger": sum(1 for r in self.rows if r.omms_stronger),
            "rows_equal_entitlements": sum(1 for r in self.rows if r.equal_entitlements),
            "bmms_conjecture_counterexamples": len(self.conjecture_counterexamples()),
        }


def _frac(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _row_jsonable(row: ScanRow) -> dict:
    return {
        "items": list(row.items),
        "entitlements": [_frac(t) for t in row.entitlements],
        "omms_max": list(row.omms_max),
        "wmms": [_frac(v) for v in row.wmms],
        "bmms": [_frac(v) for v in row.bmms],
        "wmms_stronger": list(row.wmms_stronger),
        "omms_stronger": list(row.omms_stronger),
        "bmms_below_wmms": list(row.bmms_below_wmms),
        "bmms_below_omms": list(row.bmms_below_omms),
        "equal_entitlements": row.equal_entitlements,
        "omms_wmms_coincide": row.omms_wmms_coincide,
    }


def report_jsonable(report: ScanReport) -> dict:
    return {
        "seed": report.seed,
        "rows": [_row_jsonable(r) for r in report.rows],
        "summary": report.summary(),
    }


CSV_COLUMNS = [
    "items",
    "entitlements",
    "agent",
    "omms_max",
    "wmms",
    "bmms",
    "wmms_stronger_than_omms",
    "omms_stronger_than_wmms",
    "bmms_below_wmms",
    "bmms_below_omms",
]


def write_csv_rows(rows: Sequence[dict], out: IO[str]) -> None:
    """One line per (instance, entitlements, agent); rows as produced by
    `report_jsonable`."""
    writer = csv.writer(out)
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        items_text = " ".join(str(v) for v in row["items"])
        ents_text = " ".join(row["entitlements"])
        for i in range(len(row["entitlements"])):
            writer.writerow(
                [
                    items_text,
                    ents_text,
                    i,
                    row["omms_max"][i],
                    row["wmms"][i],
                    row["bmms"][i],
                    int(i in row["wmms_stronger"]),
                    int(i in row["omms_stronger"]),
                    int(i in row["bmms_below_wmms"]),
                    int(i in row["bmms_below_omms"]),
                ]
            )


def write_csv(report: ScanReport, out: IO[str]) -> None:
    write_csv_rows(report_jsonable(report)["rows"], out)


def _instances(
    max_items: int, value_grid: Sequence[Value], max_instances: int | None, seed: int
) -> list[tuple[Value, ...]]:
    grid = sorted(set(value_grid), reverse=True)
    if not grid or max_items < 1:
        return []
    all_multisets: list[tuple[Value, ...]] = []
    for size in range(1, max_items + 1):
        all_multisets.extend(itertools.combinations_with_replacement(grid, size))
    if max_instances is not None and len(all_multisets) > max_instances:
        rng = random.Random(seed)
        all_multisets = rng.sample(all_multisets, max_instances)
    return sorted(all_multisets, key=lambda t: (len(t), t))


def scan_one(
    instance: Instance,
    t: EntitlementVector,
    limits: SearchLimits = DEFAULT_LIMITS,
) -> ScanRow:
    best_ratio, _ = weighted_maximin_partition(instance, t.entitlements, limits)
    omms_max = []
    wmms = []
    bmms = []
    for t_i in t:
        requirements = omms_requirements(instance, t_i, limits)
        omms_max.append(max((v for _, v in requirements), default=0))
        wmms.append(t_i * best_ratio)
        bmms.append(bmms_value(instance, t_i, limits))
    idx = range(len(t))
    return ScanRow(
        items=tuple(instance.items),
        entitlements=tuple(t.entitlements),
        omms_max=tuple(omms_max),
        wmms=tuple(wmms),
        bmms=tuple(bmms),
        wmms_stronger=tuple(i for i in idx if wmms[i] > omms_max[i]),
        omms_stronger=tuple(i for i in idx if omms_max[i] > wmms[i]),
        bmms_below_wmms=tuple(i for i in idx if bmms[i] < wmms[i]),
        bmms_below_omms=tuple(i for i in idx if bmms[i] < omms_max[i]),
    )


def notion_separation_scan(
    max_items: int,
    value_grid: Sequence[Value],
    entitlement_grid: Sequence[EntitlementVector],
    *,
    max_instances: int | None = None,
    seed: int = 0,
    limits: SearchLimits = DEFAULT_LIMITS,
) -> ScanReport:
    """Scan every multiset of 1..max_items values from `value_grid` against
    every entitlement vector; sample deterministically when the multiset
    count exceeds `max_instances`. Rows are sorted by instance encoding."""
    rows = []
    for items in _instances(max_items, value_grid, max_instances, seed):
        instance = Instance(items)
        for t in entitlement_grid:
            rows.append(scan_one(instance, t, limits))
    return ScanReport(rows=tuple(rows), seed=seed)
