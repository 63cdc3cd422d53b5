"""Named instances, the corpus and the recorded status registry."""

import pytest

from wdlat import (
    BUILTIN_NAMES,
    axiom_report,
    builtin,
    corpus,
    recorded_findings_report,
)
from wdlat.errors import NotBounded, UnknownBuiltin


def test_builtin_names():
    assert BUILTIN_NAMES == ("B2", "B4", "B8", "L6", "L6-trivial", "L7",
                             "chain-n-trivial")


def test_every_fixed_builtin_is_a_wdl():
    for name in BUILTIN_NAMES:
        if name == "chain-n-trivial":
            continue
        D = builtin(name)
        assert axiom_report(D).ok(), name


def test_chain_family():
    D = builtin("chain-7-trivial")
    assert D.base.n == 7
    assert D.has_delta and D.has_nabla
    assert axiom_report(D).ok()
    with pytest.raises(NotBounded):
        builtin("chain-0-trivial")
    with pytest.raises(UnknownBuiltin):
        builtin("chain-seven-trivial")


def test_unknown_builtin_lists_choices():
    with pytest.raises(UnknownBuiltin, match="B2, B4, B8, L6"):
        builtin("nope")


def test_builtins_are_fresh_objects():
    a, b = builtin("L6"), builtin("L6")
    assert a is not b and a.delta == b.delta


def test_l7_shape(L7):
    lat = L7.base
    assert lat.names == ("0", "u", "v", "w", "a", "b", "1")
    assert len(lat.covers) == 9
    assert not lat.is_distributive()
    assert lat.distributivity_witness() is not None


def test_corpus_contents(named_corpus):
    names = [n for n, _ in named_corpus]
    assert names == ["L6", "L7", "B2", "B4", "B8", "L6-trivial",
                     "chain-3-trivial"]
    for name, D in named_corpus:
        assert D.has_delta, name


def test_recorded_statuses_on_l6(L6):
    rep = recorded_findings_report("L6", L6)
    counts = rep.counts()
    assert counts == {"pass": 3, "fail": 0, "finding": 1, "skip": 0}
    finding = rep.findings()[0]
    assert finding.law_id == "recorded.dagger-status"
    assert finding.witness == ("{a,1}", "a", "a", "u")


def test_recorded_statuses_skip_elsewhere(L7):
    rep = recorded_findings_report("L7", L7)
    assert rep.counts()["skip"] == 1
    assert rep.ok()
