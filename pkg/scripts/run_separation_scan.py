#!/usr/bin/env python3
"""Sweep small instances against a grid of entitlement vectors and report
where the OMMS / WMMS / BMMS requirements separate.

The default grid includes the two-item configurations where WMMS is known
to be strictly stronger than OMMS (two agents) and strictly weaker (three
agents with a forced empty part), plus equal-entitlement controls.
Deterministic for a fixed --seed.
"""
from __future__ import annotations

import argparse
from fractions import Fraction
from pathlib import Path

from mmsfair.core import EntitlementVector
from mmsfair.scan import notion_separation_scan, report_jsonable, write_csv

DEFAULT_ENTITLEMENTS = [
    EntitlementVector((Fraction(2, 5), Fraction(3, 5))),
    EntitlementVector((Fraction(3, 5), Fraction(1, 5), Fraction(1, 5))),
    EntitlementVector((Fraction(1, 2), Fraction(1, 2))),
    EntitlementVector((Fraction(1, 3), Fraction(1, 3), Fraction(1, 3))),
    EntitlementVector((Fraction(74, 100), Fraction(26, 100))),
]


def parse_args() -> argparse.Namespace:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-items", type=int, default=3)
    parser.add_argument(
        "--values",
        default="0,1,2,40,60",
        help="comma separated value grid (default %(default)s)",
    )
    parser.add_argument(
        "--entitlements",
        default=None,
        help='";"-separated vectors, e.g. "0.4,0.6;0.5,0.5" (default: built-in grid)',
    )
    parser.add_argument("--max-instances", type=int, default=None)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", default="separation_scan.csv")
    return parser.parse_args()


def main() -> None:
    args = parse_args()
    values = [int(v) for v in args.values.split(",") if v.strip()]
    if args.entitlements is None:
        grid = DEFAULT_ENTITLEMENTS
    else:
        grid = [
            EntitlementVector.parse(vector)
            for vector in args.entitlements.split(";")
            if vector.strip()
        ]
    report = notion_separation_scan(
        args.max_items,
        values,
        grid,
        max_instances=args.max_instances,
        seed=args.seed,
    )
    with open(args.out, "w", newline="") as handle:
        write_csv(report, handle)

    summary = report_jsonable(report)["summary"]
    print(f"wrote {summary['rows']} rows to {Path(args.out).resolve()}")
    print(
        "WMMS strictly stronger than OMMS somewhere: "
        f"{summary['rows_wmms_strictly_stronger']} rows"
    )
    print(
        "OMMS strictly stronger than WMMS somewhere: "
        f"{summary['rows_omms_strictly_stronger']} rows"
    )
    counterexamples = report.conjecture_counterexamples()
    if counterexamples:
        print(f"BMMS-implies-WMMS/OMMS: COUNTEREXAMPLE FOUND ({len(counterexamples)} rows):")
        for row in counterexamples[:10]:
            print(f"  items={row.items} entitlements={row.entitlements}")
    else:
        print(
            "BMMS-implies-WMMS/OMMS: no counterexample found at this scale "
            f"({summary['rows']} rows)"
        )


if __name__ == "__main__":
    main()
