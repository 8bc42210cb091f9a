"""End-to-end CLI behavior: files, reports, tables, exit codes."""

from __future__ import annotations

import json

import pytest

from qmds.cli import main


def run_cli(argv, capsys):
    rc = main(argv)
    out, err = capsys.readouterr()
    return rc, out, err


def construct(tmp_path, capsys, name, *flags):
    path = tmp_path / name
    rc, _, err = run_cli(["construct", "--out", str(path), *flags], capsys)
    assert rc == 0, err
    return path


def test_construct_writes_schema_fields(tmp_path, capsys):
    path = construct(tmp_path, capsys, "c.json", "--family", "grs-a", "--q", "3", "--a", "1", "--d", "3")
    payload = json.loads(path.read_text())
    assert payload["schema_version"] == 1
    assert payload["field"] == {"p": 3, "t": 1, "modulus": payload["field"]["modulus"]}
    assert payload["code"]["n"] == 8 and payload["code"]["k"] == 2
    assert len(payload["code"]["generator"]) == 2
    assert payload["provenance"]["claims"]["orthogonality"] == "self-orthogonal"
    assert payload["provenance"]["claims"]["claimed_distance_lb"] == 7
    assert payload["provenance"]["parameters"]["m"] == 1  # derived, not passed
    assert payload["certificates"][0]["overall"] == "pass"


def test_construct_is_byte_identical(tmp_path, capsys):
    flags = ["--family", "grs-a", "--q", "5", "--a", "2", "--d", "4"]
    first = construct(tmp_path, capsys, "one.json", *flags)
    second = construct(tmp_path, capsys, "two.json", *flags)
    assert first.read_bytes() == second.read_bytes()


def test_verify_all_on_fresh_file(tmp_path, capsys):
    path = construct(tmp_path, capsys, "c.json", "--family", "grs-a", "--q", "3", "--a", "1", "--d", "3")
    rc, out, _ = run_cli(["verify", "--in", str(path), "--check", "all"], capsys)
    assert rc == 0
    report = json.loads(out)
    verdicts = {c["name"]: c["verdict"] for c in report["checks"]}
    assert verdicts == {
        "gram": "pass",
        "dual-containing": "skipped",
        "min-distance": "pass",
        "mds": "pass",
    }
    dist = next(c for c in report["checks"] if c["name"] == "min-distance")
    assert "exact d = 7" in dist["detail"]


def test_verify_detects_corruption(tmp_path, capsys):
    path = construct(tmp_path, capsys, "c.json", "--family", "grs-a", "--q", "3", "--a", "1", "--d", "3")
    payload = json.loads(path.read_text())
    entry = payload["code"]["generator"][0][0]
    payload["code"]["generator"][0][0] = (entry + 1) % 81
    path.write_text(json.dumps(payload))
    rc, out, _ = run_cli(["verify", "--in", str(path), "--check", "gram"], capsys)
    assert rc == 3
    report = json.loads(out)
    assert report["overall"] == "fail"
    assert report["checks"][0]["verdict"] == "fail"


def test_malformed_files_exit_4(tmp_path, capsys):
    bad = tmp_path / "broken.json"

    bad.write_text("{ not json")
    assert run_cli(["verify", "--in", str(bad), "--check", "all"], capsys)[0] == 4

    bad.write_text(json.dumps({"schema_version": 99}))
    assert run_cli(["verify", "--in", str(bad), "--check", "all"], capsys)[0] == 4

    good = construct(tmp_path, capsys, "c.json", "--family", "grs-a", "--q", "3", "--a", "1", "--d", "3")
    payload = json.loads(good.read_text())
    del payload["code"]
    bad.write_text(json.dumps(payload))
    assert run_cli(["verify", "--in", str(bad), "--check", "all"], capsys)[0] == 4

    payload = json.loads(good.read_text())
    payload["code"]["generator"][0][0] = 81  # not a field element of GF(81)
    bad.write_text(json.dumps(payload))
    assert run_cli(["verify", "--in", str(bad), "--check", "all"], capsys)[0] == 4

    payload = json.loads(good.read_text())
    payload["code"]["generator"][1] = payload["code"]["generator"][0]  # rank collapse
    bad.write_text(json.dumps(payload))
    assert run_cli(["verify", "--in", str(bad), "--check", "all"], capsys)[0] == 4

    assert run_cli(["verify", "--in", str(tmp_path / "absent.json"), "--check", "all"], capsys)[0] == 4


def test_even_q_rejected_with_error_json(tmp_path, capsys):
    rc, _, err = run_cli(
        ["construct", "--family", "grs-a", "--q", "4", "--a", "1", "--d", "3", "--out", str(tmp_path / "x.json")],
        capsys,
    )
    assert rc == 2
    detail = json.loads(err)
    assert detail["error"] == "EvenCharacteristic"
    assert detail["exit_code"] == 2


def test_missing_family_flags_exit_2(tmp_path, capsys):
    out = str(tmp_path / "x.json")
    rc, _, err = run_cli(["construct", "--family", "grs-a", "--q", "3", "--d", "3", "--out", out], capsys)
    assert rc == 2 and "--a" in json.loads(err)["message"]
    rc, _, err = run_cli(["construct", "--family", "extended", "--q", "3", "--out", out], capsys)
    assert rc == 2 and "--k" in json.loads(err)["message"]
    rc, _, err = run_cli(["construct", "--family", "mp6", "--q", "3", "--d", "2", "--out", out], capsys)
    assert rc == 2 and "--variant" in json.loads(err)["message"]


def test_construct_mp7_embeds_quantum_record(tmp_path, capsys):
    path = construct(
        tmp_path, capsys, "q.json", "--family", "mp7", "--q", "5", "--d", "4", "--variant", "1"
    )
    payload = json.loads(path.read_text())
    assert payload["code"]["n"] == 52 and payload["code"]["k"] == 48
    quantum = payload["provenance"]["quantum"]
    assert (quantum["n"], quantum["k"], quantum["d"]) == (52, 44, 4)
    assert quantum["certification"] == "FULL"
    assert quantum["singleton"] == "strict"
    rc, out, _ = run_cli(["verify", "--in", str(path), "--check", "all"], capsys)
    assert rc == 0
    report = json.loads(out)
    dist = next(c for c in report["checks"] if c["name"] == "min-distance")
    assert dist["verdict"] == "pass"
    assert "EnumerationTooLarge" in dist["method"]


def test_construct_forced_mp6_reports_failed_checks(tmp_path, capsys):
    path = construct(
        tmp_path, capsys, "f.json",
        "--family", "mp6", "--q", "3", "--d", "4", "--variant", "5", "--force",
    )
    payload = json.loads(path.read_text())
    assert payload["provenance"]["claims"]["orthogonality"] is None
    assert payload["provenance"]["construction_checks"]["output_dual_containing"] is False
    assert payload["certificates"][0]["checks"][0]["verdict"] == "skipped"
    # the distance bound is honest even without the duality certificate
    rc, out, _ = run_cli(["verify", "--in", str(path), "--check", "all"], capsys)
    assert rc == 0
    report = json.loads(out)
    verdicts = {c["name"]: c["verdict"] for c in report["checks"]}
    assert verdicts["gram"] == "skipped" and verdicts["dual-containing"] == "skipped"
    assert verdicts["min-distance"] == "pass"


def test_unforced_out_of_range_mp6_exits_2(tmp_path, capsys):
    rc, _, err = run_cli(
        ["construct", "--family", "mp6", "--q", "3", "--d", "4", "--variant", "5",
         "--out", str(tmp_path / "x.json")],
        capsys,
    )
    assert rc == 2
    assert json.loads(err)["error"] == "DistanceOutOfRange"


def test_extended_file_roundtrip(tmp_path, capsys):
    path = construct(tmp_path, capsys, "e.json", "--family", "extended", "--q", "3", "--k", "2")
    payload = json.loads(path.read_text())
    assert payload["code"]["n"] == 10 and payload["code"]["k"] == 8
    rc, out, _ = run_cli(["verify", "--in", str(path), "--check", "dual-containing"], capsys)
    assert rc == 0 and json.loads(out)["overall"] == "pass"


def test_enum_cap_env_and_flag(tmp_path, capsys, monkeypatch):
    path = construct(tmp_path, capsys, "c.json", "--family", "grs-a", "--q", "3", "--a", "1", "--d", "3")
    monkeypatch.setenv("QMDS_MAX_ENUM", "10")
    rc, out, _ = run_cli(["verify", "--in", str(path), "--check", "min-distance"], capsys)
    assert rc == 0
    assert "column-independence floor" in json.loads(out)["checks"][0]["method"]
    # an explicit flag wins over the environment
    rc, out, _ = run_cli(
        ["verify", "--in", str(path), "--check", "min-distance", "--max-enum", "1000000"], capsys
    )
    assert rc == 0
    assert json.loads(out)["checks"][0]["method"] == "exhaustive message enumeration"


def test_table_family_sweeps(capsys):
    rc, out, _ = run_cli(["table", "--which", "family-c", "--q-max", "3"], capsys)
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0] == "family,q,a,m,d,n,k,bound_type,certification"
    assert "grs-c,3,0,4,3,6,2,exact,FULL" in lines  # [[6,2,3]]_3

    rc, out, _ = run_cli(["table", "--which", "family-a", "--q-max", "3"], capsys)
    rows = out.strip().splitlines()[1:]
    assert rows == [
        "grs-a,3,1,1,2,8,6,exact,FULL",
        "grs-a,3,1,1,3,8,4,exact,FULL",
    ]


def test_table_output_is_deterministic(capsys):
    first = run_cli(["table", "--which", "family-b", "--q-max", "5", "--format", "json"], capsys)[1]
    second = run_cli(["table", "--which", "family-b", "--q-max", "5", "--format", "json"], capsys)[1]
    assert first == second
    rows = json.loads(first)
    assert all(row["certification"] == "FULL" for row in rows)


@pytest.mark.slow
def test_table1_csv(capsys):
    rc, out, _ = run_cli(["table", "--which", "table1"], capsys)
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[0] == "family,q,d,n,k,bound_type,certification"
    assert len(lines) == 9
    assert lines[1:] == [
        "mp7-v2,3,3,20,14,lower-bound,FULL",
        "mp7-v5,5,8,48,28,lower-bound,FORMULA-ONLY",
        "mp7-v1,5,4,52,44,lower-bound,FULL",
        "mp7-v2,5,5,52,40,lower-bound,FULL",
        "mp7-v5,7,12,96,64,lower-bound,FORMULA-ONLY",
        "mp7-v1,7,4,100,92,lower-bound,FULL",
        "mp7-v2,9,5,164,152,lower-bound,FULL",
        "mp7-v1,9,4,164,156,lower-bound,FULL",
    ]
