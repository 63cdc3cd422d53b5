"""The wdlat command line: commands, output formats and exit codes."""

import json
import subprocess
import sys
from argparse import Namespace

import pytest

from wdlat.cli import INPUT_ERROR, LAW_FAILURE, OK, _emit, run
from wdlat.reports import Report

L6_TEXT = """\
elements: 0 u v a b 1
cover: 0 u
cover: 0 v
cover: u a
cover: v a
cover: v b
cover: a 1
cover: b 1
delta: 0 1
delta: u b
delta: v 1
delta: a b
delta: b u
delta: 1 0
"""


def invoke(capsys, *argv):
    rc = run(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def invoke_json(capsys, *argv):
    rc, out, err = invoke(capsys, *argv, "--json")
    return rc, json.loads(out), err


# --- happy paths -----------------------------------------------------------------


def test_validate_builtin(capsys):
    rc, out, err = invoke(capsys, "validate", "--builtin", "L6")
    assert rc == OK and err == ""
    assert "distributive: true" in out
    assert out.rstrip().endswith("ok")


def test_validate_file(capsys, tmp_path):
    f = tmp_path / "l6.txt"
    f.write_text(L6_TEXT)
    rc, out, err = invoke(capsys, "validate", "--file", str(f))
    assert rc == OK
    assert 'tables: ["delta"]' in out


def test_filters_lists_the_golden_six(capsys):
    rc, doc, _ = invoke_json(capsys, "filters", "--builtin", "L6")
    assert rc == OK and doc["ok"]
    assert doc["instance"] == "L6" and doc["command"] == "filters"
    assert doc["filters"] == [["1"], ["a", "1"], ["b", "1"], ["u", "a", "1"],
                              ["v", "a", "b", "1"],
                              ["0", "u", "v", "a", "b", "1"]]


def test_sfilters_with_traces(capsys):
    rc, doc, _ = invoke_json(capsys, "sfilters", "--builtin", "L6")
    assert rc == OK
    assert doc["sfilters"] == [
        {"members": ["1"], "trace": ["1"]},
        {"members": ["b", "1"], "trace": ["b", "1"]},
        {"members": ["u", "a", "1"], "trace": ["u", "1"]},
        {"members": ["0", "u", "v", "a", "b", "1"],
         "trace": ["0", "u", "b", "1"]},
    ]


def test_spectra_classification(capsys):
    rc, doc, _ = invoke_json(capsys, "spectra", "--builtin", "L6")
    assert rc == OK
    flags = {tuple(c["filter"]): (c["prime"], c["primary"], c["maximal"])
             for c in doc["classifications"]}
    assert flags[("a", "1")] == (False, False, False)
    assert flags[("b", "1")] == (True, True, False)
    assert flags[("u", "a", "1")] == (True, True, True)


def test_congruences_command(capsys):
    rc, doc, _ = invoke_json(capsys, "congruences", "--builtin", "L6")
    assert rc == OK
    assert len(doc["congruences"]) == 6
    assert doc["determination"] == {
        "blocks": [["0", "v"], ["u", "a"], ["b"], ["1"]],
        "is_congruence": True}
    assert doc["regular"] is False


def test_congruences_on_simple_instance(capsys):
    rc, doc, _ = invoke_json(capsys, "congruences", "--builtin", "L7")
    assert rc == OK
    assert len(doc["congruences"]) == 2
    assert doc["determination"]["is_congruence"] is False


def test_laws_command(capsys):
    rc, out, _ = invoke(capsys, "laws", "--builtin", "L6")
    assert rc == OK
    assert "PASS" in out and "FAIL" not in out


def test_enumerate_command(capsys):
    rc, out, _ = invoke(capsys, "enumerate", "--builtin", "B4", "--side", "delta")
    assert rc == OK
    assert out.startswith("2 delta tables on B4")
    rc, out, _ = invoke(capsys, "enumerate", "--builtin", "B4", "--side", "nabla")
    assert out.startswith("2 nabla tables on B4")


def test_export_dot(capsys):
    rc, out, _ = invoke(capsys, "export-dot", "--builtin", "L7")
    assert rc == OK
    assert out.startswith("digraph lattice {")
    assert out.count("->") == 9


def test_export_dot_bare_lattice(capsys, tmp_path):
    f = tmp_path / "two.txt"
    f.write_text("elements: 0 1\ncover: 0 1\n")
    rc, out, _ = invoke(capsys, "export-dot", "--file", str(f))
    assert rc == OK and "shape=box" not in out


# --- verify-all --------------------------------------------------------------------


def test_verify_all_is_green_on_every_builtin(capsys):
    from wdlat import BUILTIN_NAMES
    for name in BUILTIN_NAMES:
        target = "chain-4-trivial" if name == "chain-n-trivial" else name
        rc, out, err = invoke(capsys, "verify-all", "--builtin", target)
        assert rc == OK, (target, err)
        assert "FAIL" not in out, target


def test_verify_all_emits_the_complete_catalog(capsys):
    rc, doc, _ = invoke_json(capsys, "verify-all", "--builtin", "L6")
    assert rc == OK and doc["ok"]
    assert doc["laws_emitted"] == doc["laws_registered"]
    assert "laws_missing" not in doc


def test_verify_all_reports_the_recorded_finding(capsys):
    rc, doc, _ = invoke_json(capsys, "verify-all", "--builtin", "L6")
    assert rc == OK
    rows = [r for rep in doc["reports"] for r in rep["results"]
            if r["status"] == "finding"]
    assert rows == [{"law": "recorded.dagger-status", "status": "finding",
                     "witness": ["{a,1}", "a", "a", "u"]}]


def test_verify_all_findings_do_not_fail(capsys):
    # instances with known divergences still exit 0 and mark them findings
    rc, doc, _ = invoke_json(capsys, "verify-all", "--builtin", "L6-trivial")
    assert rc == OK and doc["ok"]
    statuses = {r["status"] for rep in doc["reports"] for r in rep["results"]}
    assert "finding" in statuses and "fail" not in statuses


def test_json_output_is_deterministic(capsys):
    rc1, out1, _ = invoke(capsys, "verify-all", "--builtin", "L6", "--json")
    rc2, out2, _ = invoke(capsys, "verify-all", "--builtin", "L6", "--json")
    assert rc1 == rc2 == OK and out1 == out2


# --- failure exit code ----------------------------------------------------------------


def test_law_failures_exit_nonzero(capsys):
    rep = Report(subject="axioms")
    rep.add("delta.double-drop", False, ("x",))
    rc = _emit(Namespace(json=False), "demo", [rep], {})
    out = capsys.readouterr().out
    assert rc == LAW_FAILURE
    assert "law failures present" in out
    rep2 = Report(subject="axioms")
    rep2.add("delta.double-drop", True)
    rc = _emit(Namespace(json=True, command="laws"), "demo", [rep2], {})
    assert rc == OK


# --- input errors -----------------------------------------------------------------------


def test_unknown_builtin(capsys):
    rc, out, err = invoke(capsys, "validate", "--builtin", "nope")
    assert rc == INPUT_ERROR
    assert "no builtin named 'nope'" in err


def test_missing_file(capsys, tmp_path):
    rc, _, err = invoke(capsys, "validate", "--file", str(tmp_path / "gone.txt"))
    assert rc == INPUT_ERROR and "error:" in err


def test_parse_error_carries_line_number(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("elements: a b\ncover: a\n")
    rc, _, err = invoke(capsys, "laws", "--file", str(f))
    assert rc == INPUT_ERROR and "line 2" in err


def test_laws_need_tables(capsys, tmp_path):
    f = tmp_path / "bare.txt"
    f.write_text("elements: 0 1\ncover: 0 1\n")
    rc, _, err = invoke(capsys, "laws", "--file", str(f))
    assert rc == INPUT_ERROR and "bare lattice" in err
    # validate and export-dot accept the same file
    assert invoke(capsys, "validate", "--file", str(f))[0] == OK
    assert invoke(capsys, "export-dot", "--file", str(f))[0] == OK


def test_size_cap_is_an_input_error(capsys):
    rc, _, err = invoke(capsys, "congruences", "--builtin", "B8",
                        "--max-size", "4")
    assert rc == INPUT_ERROR and "capped at 4" in err


def test_invalid_wdl_table_is_an_input_error(capsys, tmp_path):
    f = tmp_path / "badtable.txt"
    f.write_text("elements: 0 1\ncover: 0 1\ndelta: 0 0\ndelta: 1 1\n")
    rc, _, err = invoke(capsys, "validate", "--file", str(f))
    assert rc == INPUT_ERROR


def test_argparse_rejects_bad_invocations():
    for argv in (["laws"], ["laws", "--builtin", "L6", "--file", "x"], []):
        with pytest.raises(SystemExit) as exc:
            run(argv)
        assert exc.value.code == 2


# --- console entry point ------------------------------------------------------------------


def test_installed_entry_point():
    proc = subprocess.run([sys.executable, "-m", "wdlat.cli", "validate",
                           "--builtin", "L6"],
                          capture_output=True, text=True)
    assert proc.returncode == OK
    assert "ok" in proc.stdout
