"""Command-line interface.

Subcommands: `mms` (share value and witness), `dominates` (condition
comparison with counterexample), `pairs` (non-dominated conditions for an
entitlement), `audit` (allocation fairness report), `scan` (notion
separation sweep). Every command supports --json; outputs are
deterministic, so repeated runs are byte-identical. Exit codes: 0 success
or true verdict, 1 false verdict, 2 usage or parse error, 3 refused by the
search safety bound.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass
from fractions import Fraction
from pathlib import Path

from . import __version__
from .core import (
    EntitlementVector,
    Instance,
    InstanceTooLargeError,
    MmsPair,
    canonicalize,
    parse_items,
    parse_rational,
)
from .criteria import Allocation, audit
from .dominance import decompose, dominates, non_dominance_witness
from .engine import DEFAULT_LIMITS, SearchLimits, mms, mms_cardinality
from .pairs import candidate_pairs, filtration_trace, non_dominated_pairs
from .scan import notion_separation_scan, report_jsonable, write_csv_rows

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_REFUSED = 3

CRITERIA = ("omms", "wmms", "bmms")


@dataclass
class RunRecord:
    """Replayable record of one invocation. `outputs` is bit-exact across
    reruns; only `wall_time_s` varies."""

    command: str
    inputs: dict
    outputs: dict
    engine_version: str
    wall_time_s: float


def replay(record: RunRecord) -> dict:
    """Re-run the recorded inputs; returns outputs that must equal the
    recorded ones."""
    _, outputs = execute(record.command, record.inputs)
    return outputs


def _frac(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _limits(inputs: dict) -> SearchLimits:
    return SearchLimits(
        max_items=int(inputs.get("max_items", DEFAULT_LIMITS.max_items)),
        max_parts=int(inputs.get("max_parts", DEFAULT_LIMITS.max_parts)),
    )


def _instance(inputs: dict) -> Instance:
    return Instance(tuple(inputs["items"]))


def execute(command: str, inputs: dict) -> tuple[int, dict]:
    """Pure dispatch from JSON-able inputs to (exit code, JSON-able outputs)."""
    handlers = {
        "mms": _exec_mms,
        "dominates": _exec_dominates,
        "pairs": _exec_pairs,
        "audit": _exec_audit,
        "scan": _exec_scan,
    }
    if command not in handlers:
        raise ValueError(f"unknown command {command!r}")
    return handlers[command](inputs)


def _exec_mms(inputs: dict) -> tuple[int, dict]:
    instance = _instance(inputs)
    pair = MmsPair.parse(inputs["pair"])
    result = mms(instance, pair, _limits(inputs))
    canonical = canonicalize(instance)
    outputs = {
        "pair": str(pair),
        "value": result.value,
        "canonical_items": list(canonical.items),
        "witness": {"d": result.witness.d, "part_of": list(result.witness.part_of)},
        "witness_parts": result.witness.parts(canonical.items),
        "witness_part_sums": result.witness.part_sums(canonical.items),
    }
    return EXIT_OK, outputs


def _exec_dominates(inputs: dict) -> tuple[int, dict]:
    p = MmsPair.parse(inputs["pair"])
    other = MmsPair.parse(inputs["other"])
    dec = decompose(p.d, other.d)
    verdict = dominates(p, other)
    outputs = {
        "pair": str(p),
        "other": str(other),
        "dominates": verdict,
        "q": dec.q,
        "r": dec.r,
        "witness": None,
    }
    if not verdict:
        witness = non_dominance_witness(p, other)
        # Closed form for unit items: valid for any part count.
        outputs["witness"] = {
            "items": list(witness.items),
            "pair_value": mms_cardinality(len(witness), p),
            "other_value": mms_cardinality(len(witness), other),
        }
    return (EXIT_OK if verdict else EXIT_FALSE), outputs


def _exec_pairs(inputs: dict) -> tuple[int, dict]:
    a = parse_rational(inputs["entitlement"])
    m = int(inputs["item_count"])
    survivors = non_dominated_pairs(a, m)
    trace = filtration_trace(a, m)
    outputs = {
        "entitlement": _frac(survivors.entitlement),
        "item_count": m,
        "candidates": [str(p) for p in candidate_pairs(a, m)],
        "survivors": [str(p) for p in survivors.pairs],
        "trace": [
            {"removed": str(t.removed), "by": str(t.by), "q": t.q, "r": t.r}
            for t in trace
        ],
    }
    return EXIT_OK, outputs


def _exec_audit(inputs: dict) -> tuple[int, dict]:
    instance = _instance(inputs)
    t = EntitlementVector(tuple(parse_rational(s) for s in inputs["entitlements"]))
    alloc = Allocation.from_lists(inputs["allocation"])
    criteria = list(inputs.get("criteria") or CRITERIA)
    for name in criteria:
        if name not in CRITERIA:
            raise ValueError(f"unknown criterion {name!r}; choose from {CRITERIA}")
    report = audit(instance, t, alloc, _limits(inputs))
    all_ok = report.all_ok(criteria)
    outputs = {
        "criteria": criteria,
        "all_ok": all_ok,
        "agents": [
            {
                "agent": a.agent,
                "bundle": sorted(alloc.bundles[a.agent]),
                "bundle_value": a.bundle_value,
                "omms": {
                    "ok": a.omms_ok,
                    "requirements": [
                        {"pair": str(p), "value": v} for p, v in a.omms_requirements
                    ],
                },
                "wmms": {"ok": a.wmms_ok, "value": _frac(a.wmms_value)},
                "bmms": {"ok": a.bmms_ok, "value": _frac(a.bmms_value)},
            }
            for a in report.agents
        ],
    }
    return (EXIT_OK if all_ok else EXIT_FALSE), outputs


def _exec_scan(inputs: dict) -> tuple[int, dict]:
    value_grid = [int(v) for v in inputs.get("value_grid", [])]
    entitlement_grid = [
        EntitlementVector(tuple(parse_rational(s) for s in vector))
        for vector in inputs.get("entitlement_grid", [])
    ]
    limits = SearchLimits(
        max_items=max(DEFAULT_LIMITS.max_items, int(inputs.get("max_items", 0))),
        max_parts=int(inputs.get("max_parts", DEFAULT_LIMITS.max_parts)),
    )
    report = notion_separation_scan(
        int(inputs.get("max_items", 0)),
        value_grid,
        entitlement_grid,
        max_instances=inputs.get("max_instances"),
        seed=int(inputs.get("seed", 0)),
        limits=limits,
    )
    return EXIT_OK, report_jsonable(report)


def _render_mms(outputs: dict) -> str:
    parts = " | ".join(str(p) for p in outputs["witness_parts"])
    return f"value: {outputs['value']}\nwitness parts: {parts}"


def _render_dominates(outputs: dict) -> str:
    head = (
        f"{outputs['pair']} dominates {outputs['other']}: "
        f"{'yes' if outputs['dominates'] else 'no'} "
        f"(q={outputs['q']}, r={outputs['r']})"
    )
    if outputs["witness"] is None:
        return head
    w = outputs["witness"]
    return (
        head
        + f"\nwitness: {len(w['items'])} unit items -> "
        + f"{w['pair_value']} < {w['other_value']}"
    )


def _render_pairs(outputs: dict, trace: bool) -> str:
    lines = [
        "candidates: " + " ".join(outputs["candidates"]),
        "survivors: " + " ".join(outputs["survivors"]),
    ]
    if trace:
        for step in outputs["trace"]:
            lines.append(
                f"{step['removed']} is filtered out by {step['by']} "
                f"(with q={step['q']}, r={step['r']})"
            )
    return "\n".join(lines)


def _render_audit(outputs: dict) -> str:
    lines = []
    for a in outputs["agents"]:
        verdicts = " | ".join(
            f"{name} {'ok' if a[name]['ok'] else 'FAIL'}"
            for name in CRITERIA
        )
        lines.append(f"agent {a['agent']}: bundle value {a['bundle_value']} | {verdicts}")
    checked = ",".join(outputs["criteria"])
    lines.append(
        f"verdict ({checked}): {'all pass' if outputs['all_ok'] else 'FAIL'}"
    )
    return "\n".join(lines)


def _render_scan(outputs: dict) -> str:
    s = outputs["summary"]
    lines = [
        f"rows: {s['rows']}",
        f"rows where WMMS is strictly stronger than OMMS: {s['rows_wmms_strictly_stronger']}",
        f"rows where OMMS is strictly stronger than WMMS: {s['rows_omms_strictly_stronger']}",
    ]
    n_counter = s["bmms_conjecture_counterexamples"]
    if n_counter:
        lines.append(
            f"BMMS-implies-WMMS/OMMS: COUNTEREXAMPLE FOUND in {n_counter} row(s)"
        )
    else:
        lines.append(
            f"BMMS-implies-WMMS/OMMS: no counterexample found at this scale "
            f"({s['rows']} rows)"
        )
    return "\n".join(lines)


def _render(command: str, outputs: dict, args: argparse.Namespace) -> str:
    if command == "mms":
        return _render_mms(outputs)
    if command == "dominates":
        return _render_dominates(outputs)
    if command == "pairs":
        return _render_pairs(outputs, getattr(args, "trace", False))
    if command == "audit":
        return _render_audit(outputs)
    return _render_scan(outputs)


def _load_items(args: argparse.Namespace) -> list[int]:
    if getattr(args, "items_file", None):
        text = Path(args.items_file).read_text().strip()
        if text.startswith("["):
            values = json.loads(text)
            return list(Instance(tuple(values)).items)
        return list(parse_items(text).items)
    return list(parse_items(args.items if args.items is not None else "").items)


def _build_mms_inputs(args: argparse.Namespace) -> dict:
    return {
        "items": _load_items(args),
        "pair": args.pair,
        "max_items": args.max_items,
        "max_parts": args.max_parts,
    }


def _build_dominates_inputs(args: argparse.Namespace) -> dict:
    return {"pair": f"{args.l}/{args.d}", "other": f"{args.l_prime}/{args.d_prime}"}


def _build_pairs_inputs(args: argparse.Namespace) -> dict:
    return {"entitlement": args.entitlement, "item_count": args.items_count}


def _parse_allocation(text: str) -> list[list[int]]:
    bundles = []
    for segment in text.split(";"):
        tokens = [t for t in segment.replace(",", " ").split() if t]
        try:
            bundles.append([int(t) for t in tokens])
        except ValueError as exc:
            raise ValueError(f"bad allocation segment {segment!r}") from exc
    return bundles


def _build_audit_inputs(args: argparse.Namespace) -> dict:
    criteria = [c for c in (args.criteria or "").split(",") if c]
    return {
        "items": _load_items(args),
        "entitlements": [s.strip() for s in args.entitlements.split(",") if s.strip()],
        "allocation": _parse_allocation(args.allocation),
        "criteria": criteria or list(CRITERIA),
        "max_items": args.max_items,
        "max_parts": args.max_parts,
    }


def _build_scan_inputs(args: argparse.Namespace) -> dict:
    value_grid = [t for t in (args.values or "").replace(",", " ").split() if t]
    entitlement_grid = [
        [s.strip() for s in vector.split(",") if s.strip()]
        for vector in (args.entitlements or "").split(";")
        if vector.strip()
    ]
    return {
        "max_items": args.max_items_scan,
        "value_grid": [int(v) for v in value_grid],
        "entitlement_grid": entitlement_grid,
        "max_instances": args.max_instances,
        "seed": args.seed,
        "max_parts": args.max_parts,
    }


def _add_limit_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--max-items",
        type=int,
        default=DEFAULT_LIMITS.max_items,
        help="search safety bound on item count (default %(default)s)",
    )
    parser.add_argument(
        "--max-parts",
        type=int,
        default=DEFAULT_LIMITS.max_parts,
        help="search safety bound on part count (default %(default)s)",
    )


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument(
        "--record", metavar="FILE", help="write a replayable run record (JSON)"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mmsfair",
        description="Exact maximin-share fairness toolkit for unequal entitlements.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command")

    p_mms = sub.add_parser("mms", help="l-out-of-d share value and witness")
    p_mms.add_argument("--items", help="comma/whitespace separated item values")
    p_mms.add_argument("--items-file", help="file with item values (text or JSON array)")
    p_mms.add_argument("--pair", required=True, help="share condition as l/d")
    _add_limit_flags(p_mms)
    _add_common_flags(p_mms)
    p_mms.set_defaults(build=_build_mms_inputs)

    p_dom = sub.add_parser("dominates", help="does (l,d) dominate (l',d')?")
    p_dom.add_argument("l", type=int)
    p_dom.add_argument("d", type=int)
    p_dom.add_argument("l_prime", type=int)
    p_dom.add_argument("d_prime", type=int)
    _add_common_flags(p_dom)
    p_dom.set_defaults(build=_build_dominates_inputs)

    p_pairs = sub.add_parser("pairs", help="non-dominated conditions for an entitlement")
    p_pairs.add_argument("--entitlement", required=True, help='entitlement, "p/q" or decimal')
    p_pairs.add_argument("--items-count", required=True, type=int)
    p_pairs.add_argument("--trace", action="store_true", help="show every filtration step")
    _add_common_flags(p_pairs)
    p_pairs.set_defaults(build=_build_pairs_inputs)

    p_audit = sub.add_parser("audit", help="audit an allocation against the criteria")
    p_audit.add_argument("--items", help="comma/whitespace separated item values")
    p_audit.add_argument("--items-file", help="file with item values (text or JSON array)")
    p_audit.add_argument(
        "--entitlements", required=True, help='comma separated, e.g. "0.4,0.6"'
    )
    p_audit.add_argument(
        "--allocation",
        required=True,
        help='bundles of item indices, ";"-separated, e.g. "0,3;1,2;4" (empty allowed)',
    )
    p_audit.add_argument(
        "--criteria", default="", help="subset of omms,wmms,bmms (default: all)"
    )
    _add_limit_flags(p_audit)
    _add_common_flags(p_audit)
    p_audit.set_defaults(build=_build_audit_inputs)

    p_scan = sub.add_parser("scan", help="notion separation sweep over small grids")
    p_scan.add_argument(
        "--max-items",
        dest="max_items_scan",
        type=int,
        default=2,
        help="largest multiset size to enumerate (default %(default)s)",
    )
    p_scan.add_argument("--values", default="", help='value grid, e.g. "0,40,60"')
    p_scan.add_argument(
        "--entitlements",
        default="",
        help='entitlement vectors, ";"-separated, e.g. "0.4,0.6;0.6,0.2,0.2"',
    )
    p_scan.add_argument("--max-instances", type=int, default=None)
    p_scan.add_argument("--seed", type=int, default=0)
    p_scan.add_argument("--out", metavar="FILE", help="write the CSV report here")
    p_scan.add_argument(
        "--max-parts",
        type=int,
        default=DEFAULT_LIMITS.max_parts,
        help="search safety bound on part count (default %(default)s)",
    )
    _add_common_flags(p_scan)
    p_scan.set_defaults(build=_build_scan_inputs)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.command is None:
        parser.print_help()
        return EXIT_USAGE

    try:
        inputs = args.build(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    started = time.perf_counter()
    try:
        code, outputs = execute(args.command, inputs)
    except InstanceTooLargeError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    wall = time.perf_counter() - started

    if args.record:
        record = RunRecord(
            command=args.command,
            inputs=inputs,
            outputs=outputs,
            engine_version=__version__,
            wall_time_s=wall,
        )
        Path(args.record).write_text(json.dumps(asdict(record), sort_keys=True, indent=2))

    if args.command == "scan" and getattr(args, "out", None):
        with open(args.out, "w", newline="") as handle:
            write_csv_rows(outputs["rows"], handle)

    if args.json:
        envelope = {
            "command": args.command,
            "engine_version": __version__,
            "inputs": inputs,
            "outputs": outputs,
        }
        print(json.dumps(envelope, sort_keys=True, indent=2))
    else:
        print(_render(args.command, outputs, args))
    return code


if __name__ == "__main__":
    raise SystemExit(main())
