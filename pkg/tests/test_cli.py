import json

import pytest

from mmsfair.cli import RunRecord, execute, main, replay


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_mms_command(capsys):
    code, out, _ = run(capsys, "mms", "--items", "1,3,5,6,9", "--pair", "1/3")
    assert code == 0
    assert "value: 7" in out


def test_mms_empty_items(capsys):
    code, out, _ = run(capsys, "mms", "--items", "", "--pair", "1/3")
    assert code == 0
    assert "value: 0" in out


def test_mms_json_shape(capsys):
    code, out, _ = run(capsys, "mms", "--items", "1,3,5,6,9", "--pair", "2/5", "--json")
    assert code == 0
    blob = json.loads(out)
    assert blob["command"] == "mms"
    assert blob["outputs"]["value"] == 4
    assert blob["outputs"]["canonical_items"] == [9, 6, 5, 3, 1]
    sums = blob["outputs"]["witness_part_sums"]
    assert sum(sorted(sums)[:2]) == 4


def test_mms_parse_error_exit_2(capsys):
    code, _, err = run(capsys, "mms", "--items", "1,x", "--pair", "1/3")
    assert code == 2
    assert "error" in err


def test_mms_size_refusal_exit_3(capsys):
    items = ",".join(["1"] * 17)
    code, _, err = run(capsys, "mms", "--items", items, "--pair", "1/3")
    assert code == 3
    assert "refused" in err
    code, out, _ = run(
        capsys, "mms", "--items", items, "--pair", "1/3", "--max-items", "17"
    )
    assert code == 0


def test_mms_items_file(tmp_path, capsys):
    text_file = tmp_path / "items.txt"
    text_file.write_text("1\n3\n5\n6\n9\n")
    code, out, _ = run(capsys, "mms", "--items-file", str(text_file), "--pair", "1/3")
    assert code == 0 and "value: 7" in out

    json_file = tmp_path / "items.json"
    json_file.write_text("[1, 3, 5, 6, 9]")
    code, out, _ = run(capsys, "mms", "--items-file", str(json_file), "--pair", "1/2")
    assert code == 0 and "value: 12" in out


def test_dominates_exit_codes(capsys):
    code, out, _ = run(capsys, "dominates", "2", "3", "4", "7")
    assert code == 0
    assert "yes" in out and "q=3, r=2" in out

    code, out, _ = run(capsys, "dominates", "2", "3", "5", "7")
    assert code == 1
    assert "no" in out and "7 unit items" in out and "4 < 5" in out

    code, out, _ = run(capsys, "dominates", "1", "1", "1", "1")
    assert code == 0

    code, _, err = run(capsys, "dominates", "3", "2", "1", "1")
    assert code == 2


def test_pairs_command_and_trace(capsys):
    code, out, _ = run(capsys, "pairs", "--entitlement", "0.74", "--items-count", "7")
    assert code == 0
    assert "survivors: 2/3 5/7" in out
    assert "filtered out" not in out

    code, out, _ = run(
        capsys, "pairs", "--entitlement", "0.74", "--items-count", "7", "--trace"
    )
    assert code == 0
    assert "0/1 is filtered out by 2/3 (with q=1, r=2)" in out
    assert "3/5 is filtered out by 5/7 (with q=1, r=2)" in out


def test_pairs_other_entitlements(capsys):
    code, out, _ = run(capsys, "pairs", "--entitlement", "1/2", "--items-count", "4")
    assert code == 0 and "survivors: 1/2" in out
    code, out, _ = run(capsys, "pairs", "--entitlement", "1", "--items-count", "3")
    assert code == 0 and "survivors: 1/1" in out


def test_audit_exit_depends_on_requested_criteria(capsys):
    base = [
        "audit",
        "--items",
        "40,60",
        "--entitlements",
        "0.6,0.2,0.2",
        "--allocation",
        ";0;1",
    ]
    code, out, _ = run(capsys, *base)
    assert code == 1

    code, out, _ = run(capsys, *base, "--criteria", "wmms")
    assert code == 0

    code, out, _ = run(capsys, *base, "--criteria", "omms")
    assert code == 1

    code, _, err = run(capsys, *base, "--criteria", "envy")
    assert code == 2


def test_audit_intro_allocation(capsys):
    code, out, _ = run(
        capsys,
        "audit",
        "--items",
        "1,3,5,6,9",
        "--entitlements",
        "0.4,0.6",
        "--allocation",
        "0,3;1,2,4",
        "--criteria",
        "omms",
    )
    assert code == 0


def test_audit_single_agent(capsys):
    code, _, _ = run(
        capsys,
        "audit",
        "--items",
        "40,60",
        "--entitlements",
        "1",
        "--allocation",
        "0,1",
    )
    assert code == 0


def test_audit_json_report(capsys):
    code, out, _ = run(
        capsys,
        "audit",
        "--items",
        "40,60",
        "--entitlements",
        "0.6,0.2,0.2",
        "--allocation",
        ";0;1",
        "--json",
    )
    assert code == 1
    blob = json.loads(out)
    agents = blob["outputs"]["agents"]
    assert agents[0]["wmms"] == {"ok": True, "value": "0/1"}
    assert agents[0]["omms"]["ok"] is False
    assert {"pair": "1/2", "value": 40} in agents[0]["omms"]["requirements"]


def test_scan_command_and_csv(tmp_path, capsys):
    out_csv = tmp_path / "report.csv"
    code, out, _ = run(
        capsys,
        "scan",
        "--max-items",
        "2",
        "--values",
        "40,60",
        "--entitlements",
        "0.4,0.6;0.6,0.2,0.2",
        "--seed",
        "11",
        "--out",
        str(out_csv),
    )
    assert code == 0
    assert "no counterexample found" in out
    lines = out_csv.read_text().strip().splitlines()
    assert lines[0].startswith("items,entitlements,agent")
    assert len(lines) > 1


def test_scan_empty_bounds(capsys):
    code, out, _ = run(capsys, "scan", "--values", "", "--entitlements", "")
    assert code == 0
    assert "rows: 0" in out


def test_every_command_json_is_byte_identical(capsys):
    commands = [
        ["mms", "--items", "1,3,5,6,9", "--pair", "2/5", "--json"],
        ["dominates", "2", "3", "5", "7", "--json"],
        ["pairs", "--entitlement", "0.74", "--items-count", "7", "--json"],
        [
            "audit",
            "--items",
            "40,60",
            "--entitlements",
            "0.4,0.6",
            "--allocation",
            "0;1",
            "--json",
        ],
        [
            "scan",
            "--max-items",
            "2",
            "--values",
            "0,40,60",
            "--entitlements",
            "0.4,0.6;0.6,0.2,0.2",
            "--seed",
            "5",
            "--max-instances",
            "4",
            "--json",
        ],
    ]
    for argv in commands:
        first = run(capsys, *argv)
        second = run(capsys, *argv)
        assert first == second, argv
        assert first[0] in (0, 1)


def test_run_record_replay(tmp_path, capsys):
    record_file = tmp_path / "record.json"
    code, out, _ = run(
        capsys,
        "pairs",
        "--entitlement",
        "0.74",
        "--items-count",
        "7",
        "--record",
        str(record_file),
        "--json",
    )
    assert code == 0
    stored = json.loads(record_file.read_text())
    assert stored["engine_version"]
    assert stored["wall_time_s"] >= 0
    record = RunRecord(**stored)
    assert replay(record) == stored["outputs"]
    # and the replayed outputs equal what was printed
    assert json.loads(out)["outputs"] == stored["outputs"]


def test_execute_rejects_unknown_command():
    with pytest.raises(ValueError):
        execute("nope", {})


def test_module_entry_point_subprocess():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "mmsfair.cli", "mms", "--items", "1,3,5,6,9", "--pair", "1/3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "value: 7" in proc.stdout


def test_no_command_prints_help(capsys):
    code, out, _ = run(capsys)
    assert code == 2
    assert "usage" in out.lower()
