import io
import json
import subprocess
import sys

import jsonschema
import pytest

from qdissect import schema
from qdissect.cli import run
from qdissect.oracle import count_table


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_verify_single():
    code, text = call("verify", "--id", "eq1.5", "--order", "200", "--format", "json")
    assert code == 0
    report = json.loads(text)
    jsonschema.validate(report, schema.REPORT)
    assert report["status"] == "pass"


def test_verify_unknown():
    assert call("verify", "--id", "nosuch")[0] == 2


def test_verify_broken_fixture_exits_one():
    code, text = call("verify", "--id", "eq1.5-broken", "--order", "50", "--format", "json")
    assert code == 1
    report = json.loads(text)
    jsonschema.validate(report, schema.REPORT)
    assert report["first_mismatch"]["n"] == 5


def test_verify_all_json():
    code, text = call("verify", "--all", "--order", "30", "--format", "json")
    assert code == 0
    reports = json.loads(text)
    jsonschema.validate(reports, schema.REPORT_LIST)
    assert len(reports) == 29


def test_verify_all_deterministic_with_workers():
    _, a = call("verify", "--all", "--order", "30", "--format", "csv")
    _, b = call("verify", "--all", "--order", "30", "--format", "csv", "--workers", "4")
    strip = lambda t: [line.rsplit(",", 1)[0] for line in t.splitlines()]
    assert strip(a) == strip(b)


def test_export_json():
    code, text = call("verify", "--export-json")
    entries = json.loads(text)
    assert code == 0 and len(entries) == 29
    assert entries[3]["id"] == "eq1.5" and entries[3]["rhs"] == "3*q*f2^6*f12^6/(f1^3*f4^11)"


def test_oracle_table():
    code, text = call("oracle", "--family", "linb", "--max", "10", "--format", "csv")
    assert code == 0
    assert text.split() == [f"{n},{c}" for n, c in enumerate(count_table("linb", 10))]
    assert [int(line.split(",")[1]) for line in text.split()] == [1, 1, 0, 1, 3, 3, 1, 3, 9, 9, 4]


def test_oracle_json_and_table():
    code, text = call("oracle", "--family", "linb", "--max", "3", "--format", "json")
    assert json.loads(text)["counts"] == ["1", "1", "0", "1"]
    code, text = call("oracle", "--family", "linb", "--max", "3", "--format", "table")
    assert text.splitlines()[0].split() == ["n", "count"]


def test_oracle_unknown_family():
    assert call("oracle", "--family", "bogus")[0] == 2


def test_expand_csv():
    code, text = call("expand", "--expr", "f2^2/(f1*f4^3)", "--order", "6", "--format", "csv")
    assert code == 0
    assert text == "0,1\n1,1\n2,0\n3,1\n4,3\n5,3\n6,1\n"


def test_expand_json_schema():
    code, text = call("expand", "--expr", "1/f1^3", "--order", "600", "--format", "json")
    obj = json.loads(text)
    jsonschema.validate(obj, schema.EXPANSION)
    assert obj["ring"] == "exact" and obj["order"] == 600
    assert int(obj["coeffs"][600]) > 2**64


def test_expand_mod():
    code, text = call("expand", "--expr", "alpha(q)", "--order", "5", "--modulus", "3", "--format", "json")
    obj = json.loads(text)
    jsonschema.validate(obj, schema.EXPANSION)
    assert obj["ring"] == "mod 3" and obj["coeffs"] == ["1", "0", "0", "0", "0", "0"]


@pytest.mark.parametrize(
    "argv",
    [
        ["expand", "--expr", "f"],
        ["expand", "--expr", "1/q", "--order", "3"],
        ["expand", "--expr", "f1", "--modulus", "1"],
        ["frobnicate"],
        ["verify", "--id", "eq1.5", "--bogus"],
        ["verify"],
        ["congruence", "--family19", "--k", "3", "--nmax", "0"],
    ],
)
def test_usage_errors(argv):
    assert call(*argv)[0] == 2


def test_congruence_commands():
    assert call("congruence", "--eq17", "--nmax", "100", "--format", "json")[0] == 0
    code, text = call("congruence", "--family19", "--k", "2", "--nmax", "3", "--format", "json")
    assert code == 0 and json.loads(text)["order"] == 2643
    assert call("congruence", "--eq110", "--nmax", "30", "--format", "table")[0] == 0
    assert call("congruence", "--family19", "--k", "0", "--format", "csv")[0] == 0


def test_search():
    code, text = call("search", "--expr", "1/f1", "--modulus", "5", "--step", "5", "--nmax", "200", "--format", "json")
    obj = json.loads(text)
    assert code == 0 and 4 in obj["candidates"] and "candidates" in obj["note"]


def test_default_format_is_json_when_piped():
    proc = subprocess.run(
        [sys.executable, "-m", "qdissect.cli", "verify", "--id", "eq1.5", "--order", "50"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["status"] == "pass"


def test_console_exit_code_on_failure():
    proc = subprocess.run(
        [sys.executable, "-m", "qdissect.cli", "verify", "--id", "eq1.5-broken", "--order", "50"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 1
    assert "failing link" in proc.stderr
