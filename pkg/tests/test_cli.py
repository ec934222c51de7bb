"""Command-line interface: subcommands, exit codes, report stability."""

import json
import subprocess
import sys

import pytest

BASE = [sys.executable, "-m", "qtor.cli"]


def run(*args, timeout=300):
    return subprocess.run(BASE + list(args), capture_output=True,
                          text=True, timeout=timeout)


def test_types_lists_all_tags():
    r = run("types")
    assert r.returncode == 0
    for tag in ("A2~1", "C2~1", "G2~1", "A2~2", "D4~3"):
        assert tag in r.stdout


def test_cartan_emits_json():
    r = run("cartan", "--type", "C2~1")
    assert r.returncode == 0
    blob = json.loads(r.stdout)
    assert blob["type"] == "C2~1"
    assert len(blob["matrix"]) == 3


def test_apply_examples():
    cases = [
        (["apply", "T1", "x+(1,0)", "--type", "A2~1"], "-1*x-(1,0)*k(1)"),
        (["apply", "eta", "k(1)", "--type", "A2~1"], "1*k(1)^-1"),
        (["apply", "sigma", "x+(1,0)", "--type", "A2~1"], "1*x+(1,0)"),
    ]
    for args, expected in cases:
        r = run(*args)
        assert r.returncode == 0, r.stderr
        assert r.stdout.strip() == expected


def test_apply_braid_word():
    r = run("apply", "T1 T1'", "x+(2,0)", "--type", "A2~1")
    assert r.returncode == 0


def test_relations_guard_exit_code():
    r = run("relations", "emit", "toroidal-finite", "A1~1")
    assert r.returncode == 2
    assert "a_ij*a_ji <= 3" in r.stderr


def test_relations_emit_dj():
    r = run("relations", "emit", "dj", "A2~1")
    assert r.returncode == 0
    blob = json.loads(r.stdout)
    assert blob["relations"]


def test_oracle_validates_battery():
    r = run("oracle", "--type", "A2~1")
    assert r.returncode == 0


def test_verify_phi_series_and_report_stability():
    r1 = run("verify", "phi-series")
    r2 = run("verify", "phi-series")
    assert r1.returncode == 0
    body1 = json.loads(r1.stdout)
    body2 = json.loads(r2.stdout)
    # identical inputs give identical bodies; timing lives in a sidecar
    assert body1["body"] == body2["body"]
    assert body1["body_sha256"] == body2["body_sha256"]
    assert "time_ms" not in json.dumps(body1["body"])


def test_verify_unknown_suite_fails():
    r = run("verify", "no-such-suite")
    assert r.returncode != 0
