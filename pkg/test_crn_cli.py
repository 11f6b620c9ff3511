#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests for the command line entry point: exit codes and report output
"""

import json
import logging

import pytest

import crn_cli
from conftest import fixture_path
from crn_analysis import InternalInvariantError
from crn_cli import EXIT_FALSE, EXIT_INTERNAL, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_check_strongly_endotactic(capsys):
    code, out = run(capsys, "check", fixture_path("thomas.crn"))
    report = json.loads(out)
    assert code == EXIT_OK
    assert report["endotactic"] and report["strongly_endotactic"]
    assert report["hull"]["boundary_cycle"] == [["0", "0"], ["0", "1"], ["1", "1"], ["1", "0"]]
    assert report["terminal_interior"] is True
    assert report["deficiency"] == 1


def test_check_reports_witness(capsys):
    code, out = run(capsys, "check", fixture_path("x_to_y.crn"))
    report = json.loads(out)
    assert code == EXIT_FALSE
    assert report["endotactic_witness"]["violating_edge"]["source"] == ["1", "0"]


def test_check_usage_errors(capsys, tmp_path):
    assert main(["check", str(tmp_path / "missing.crn")]) == EXIT_USAGE
    bad = tmp_path / "bad.crn"
    bad.write_text("species X\nX -> Q\n")
    assert main(["check", str(bad)]) == EXIT_USAGE
    assert "line 2" in capsys.readouterr().err


def test_missing_subcommand_exits_with_usage():
    with pytest.raises(SystemExit) as error:
        main([])
    assert error.value.code == 2


def test_realize_writes_equivalent_network(capsys, tmp_path):
    out_file = tmp_path / "thomas_wr.crn"
    code, out = run(capsys, "realize", fixture_path("thomas.crn"), "--out", str(out_file), "--probe", "5")
    report = json.loads(out)
    assert code == EXIT_OK
    assert report["success"] and report["method"] == "boundary"
    assert report["probe"] == {"trials": 5, "successes": 5}
    assert out_file.read_text() == report["network"]

    code, out = run(capsys, "equiv", fixture_path("thomas.crn"), str(out_file), "--samples", "20")
    assert code == EXIT_OK
    assert json.loads(out)["exact"] is True

    code, out = run(capsys, "check", str(out_file))
    assert json.loads(out)["weakly_reversible"] is True


def test_realize_hypothesis_failure(capsys):
    code, out = run(capsys, "realize", fixture_path("x_to_y.crn"))
    report = json.loads(out)
    assert code == EXIT_FALSE
    assert not report["success"]
    assert report["hypothesis"] == "terminal_interior"

    code, out = run(capsys, "realize", fixture_path("net2.crn"), "--mode", "2d")
    assert code == EXIT_FALSE
    assert json.loads(out)["hypothesis"] == "strongly_endotactic"


def test_realize_needs_rates(tmp_path):
    unrated = tmp_path / "unrated.crn"
    unrated.write_text("species X Y\nX -> Y\n")
    assert main(["realize", str(unrated)]) == EXIT_USAGE


def test_disguised(capsys):
    code, out = run(capsys, "disguised", fixture_path("net1.crn"), "--at", "1,1")
    report = json.loads(out)
    assert code == EXIT_OK
    assert report["feasible"] and report["certificate_valid"]
    assert report["membership"] is True
    assert report["complex_balanced"] is True
    assert report["p1_found"] is True
    assert report["p1_source"] == "identity"

    code, out = run(capsys, "disguised", fixture_path("thomas.crn"))
    report = json.loads(out)
    assert code == EXIT_OK
    assert report["feasible"] and report["p1_found"]
    assert report["membership"] is None

    code, out = run(capsys, "disguised", fixture_path("zero_to_x.crn"))
    assert code == EXIT_FALSE
    assert json.loads(out)["feasible"] is False


def test_equiv_mismatch(capsys):
    code, out = run(capsys, "equiv", fixture_path("net1.crn"), fixture_path("thomas.crn"), "--samples", "10")
    report = json.loads(out)
    assert code == EXIT_FALSE
    assert report["mismatched_vertices"]
    assert report["max_deviation"] > 0


def test_simulate_to_stdout_and_file(capsys, tmp_path):
    code, out = run(capsys, "simulate", fixture_path("thomas.crn"), "--x0", "1,1", "--t-end", "2")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "time,X,Y"

    target = tmp_path / "trajectory.csv"
    code, out = run(capsys, "simulate", fixture_path("thomas.crn"), "--x0", "2,0.5", "--t-end", "1", "--out", str(target))
    assert code == EXIT_OK
    assert out == ""
    assert target.read_text().startswith("time,X,Y\n0,2,0.5")


def test_schema(capsys):
    code, out = run(capsys, "schema")
    schema = json.loads(out)
    assert code == EXIT_OK
    assert {"CheckReport", "RealizeReport", "DisguisedReport", "EquivReport", "SimulateReport"} <= set(schema["$defs"])


def test_config_file_overrides(capsys, tmp_path):
    config = tmp_path / "config.yaml"
    config.write_text("endotactic:\n  max_hyperplanes: 1\n")
    code = main(["--config", str(config), "check", fixture_path("thomas.crn")])
    assert code == EXIT_USAGE
    assert "hyperplanes" in capsys.readouterr().err


def test_internal_error_logs_traceback(monkeypatch, caplog):
    def broken(*args, **kwargs):
        raise InternalInvariantError("flux lost balance")

    monkeypatch.setattr(crn_cli, "build_check_report", broken)
    assert main(["check", fixture_path("thomas.crn")]) == EXIT_INTERNAL
    records = [r for r in caplog.records if r.levelno == logging.ERROR and "flux lost balance" in r.getMessage()]
    assert records
    assert records[0].exc_info is not None
    assert records[0].exc_info[0] is InternalInvariantError
