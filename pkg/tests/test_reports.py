"""The law registry and the report shape every check shares."""

import json

import pytest

from wdlat import LawResult, Report, law_catalog
from wdlat.reports import FAIL, FINDING, PASS, SKIP, law


def test_catalog_is_nonempty_with_descriptions():
    catalog = law_catalog()
    assert len(catalog) >= 100
    for law_id, text in catalog.items():
        assert law_id and " " not in law_id, law_id
        assert "." in law_id, law_id
        assert text == text.strip() and text, law_id


def test_catalog_is_a_copy():
    catalog = law_catalog()
    catalog["zz.fake"] = "nope"
    assert "zz.fake" not in law_catalog()


def test_reregistration_must_match():
    some_id, text = next(iter(law_catalog().items()))
    assert law(some_id, text) == some_id
    with pytest.raises(ValueError):
        law(some_id, "a different reading")


def test_report_rejects_unknown_ids():
    rep = Report(subject="demo")
    with pytest.raises(ValueError):
        rep.add("no.such-law", True)
    with pytest.raises(ValueError):
        rep.skip("no.such-law", "why")


def test_report_statuses_and_counts():
    some_id = next(iter(law_catalog()))
    rep = Report(subject="demo")
    rep.add(some_id, True)
    rep.add(some_id, False, ("x", "y"))
    rep.add(some_id, False, ("z",), on_fail=FINDING)
    rep.skip(some_id, "not applicable here")
    assert rep.counts() == {PASS: 1, FAIL: 1, FINDING: 1, SKIP: 1}
    assert not rep.ok() and not rep.clean()
    assert [r.status for r in rep] == [PASS, FAIL, FINDING, SKIP]
    assert len(rep.failures()) == 1 and len(rep.findings()) == 1
    assert rep.failures()[0].witness == ("x", "y")


def test_findings_do_not_break_ok():
    some_id = next(iter(law_catalog()))
    rep = Report(subject="demo")
    rep.add(some_id, False, ("w",), on_fail=FINDING)
    assert rep.ok() and not rep.clean()


def test_witness_dropped_when_law_holds():
    some_id = next(iter(law_catalog()))
    rep = Report(subject="demo")
    r = rep.add(some_id, True, ("ignored",))
    assert r.witness is None
    assert r.as_dict() == {"law": some_id, "status": "pass"}


def test_lookup_protocol():
    ids = list(law_catalog())
    rep = Report(subject="demo")
    rep.add(ids[0], True)
    assert ids[0] in rep and ids[1] not in rep
    assert rep[ids[0]].status == PASS
    with pytest.raises(KeyError):
        rep[ids[1]]


def test_lines_format():
    some_id = next(iter(law_catalog()))
    rep = Report(subject="demo")
    rep.add(some_id, False, ("a", "b"), note="why it matters")
    line = rep.lines()[0]
    assert line.startswith("FAIL")
    assert some_id in line and "witness=(a, b)" in line
    assert "[why it matters]" in line


def test_json_round_trip():
    some_id = next(iter(law_catalog()))
    rep = Report(subject="demo")
    rep.add(some_id, True)
    doc = json.loads(rep.to_json())
    assert doc == rep.as_dict()
    assert doc["subject"] == "demo"
    assert doc["counts"]["pass"] == 1
    assert doc["results"] == [{"law": some_id, "status": "pass"}]
