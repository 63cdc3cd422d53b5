"""Weak complementation axioms, derived operators and skeletons."""

import pytest
from hypothesis import given, strategies

from wdlat import (
    attach,
    axiom_report,
    boolean_dicomplementation,
    build_lattice,
    chain,
    check_identities,
    dense_sets,
    derived_ops,
    direct_power,
    dual_skeleton,
    enumerate_dicomplementations,
    enumerate_lattices,
    nearlattice_check,
    skeleton_algebra,
    skeleton_report,
    spec_of,
    trivial_dicomplementation,
)
from wdlat.errors import AxiomViolation, MissingUnary, NotBoolean

import oracle


# --- attach validation --------------------------------------------------------


def test_attach_rejects_non_antitone():
    lat = chain(3)
    with pytest.raises(AxiomViolation):
        attach(lat, delta={"0": "1", "m1": "0", "1": "m1"})


def test_attach_rejects_identity_table():
    lat = chain(2)
    with pytest.raises(AxiomViolation):
        attach(lat, delta={"0": "0", "1": "1"})


def test_attach_requires_some_table(L6):
    with pytest.raises(ValueError):
        attach(L6.base)


def test_one_sided_attach_leaves_other_side_missing(L6):
    D = attach(L6.base, delta=L6.delta)
    assert D.has_delta and not D.has_nabla
    with pytest.raises(MissingUnary):
        D.dual_weak_complement("a")
    with pytest.raises(MissingUnary):
        D.closure("a")


# --- golden tables ------------------------------------------------------------


def test_l6_tables(L6):
    assert L6.delta == {"0": "1", "u": "b", "v": "1", "a": "b", "b": "u", "1": "0"}
    assert L6.nabla == {"0": "1", "u": "v", "v": "u", "a": "0", "b": "0", "1": "0"}
    assert L6.interior("v") == "0" and L6.interior("a") == "u"
    assert L6.closure("a") == "1" and L6.closure("u") == "u"


def test_l6_skeletons(L6):
    names = L6.base.names
    assert tuple(names[i] for i in L6.interior_fixed()) == ("0", "u", "b", "1")
    assert tuple(names[i] for i in L6.closure_fixed()) == ("0", "u", "v", "1")
    assert dual_skeleton(L6) == ("0", "u", "b", "1")


def test_l6_derived_ops(L6):
    assert L6.meet_interior("a", "b") == "0"
    assert L6.meet_interior("a", "a") == "u"
    assert L6.join_interior("u", "v") == "u"
    assert L6.join_closure("u", "v") == "1"
    assert derived_ops(L6, "a", "b") == ("1", "0", "1")


def test_l6_dense_parts(L6):
    dense, codense = dense_sets(L6)
    assert dense == ("a", "b", "1")
    assert codense == ("0", "v")
    assert L6.dense_part() == dense and L6.codense_part() == codense


def test_trivial_tables():
    lat = build_lattice(spec_of(chain(3)))
    D = trivial_dicomplementation(lat)
    assert D.delta == {"0": "1", "m1": "1", "1": "0"}
    assert D.nabla == {"0": "1", "m1": "0", "1": "0"}
    assert axiom_report(D).ok()


def test_boolean_dicomplementation():
    b4 = direct_power(chain(2), 2)
    D = boolean_dicomplementation(b4)
    for x in b4.names:
        i = b4.index(x)
        c = b4.index(D.weak_complement(x))
        assert b4.meet(i, c) == b4.bottom and b4.join(i, c) == b4.top
        assert D.weak_complement(x) == D.dual_weak_complement(x)
    with pytest.raises(NotBoolean):
        boolean_dicomplementation(chain(3))


def test_dual_swaps_tables(L6):
    D = L6.dual()
    assert D.delta == L6.nabla and D.nabla == L6.delta
    assert D.dual().delta == L6.delta


# --- axiom and identity sweeps ------------------------------------------------


def test_axiom_reports_clean_on_corpus(full_corpus):
    for name, D in full_corpus:
        for rep in (axiom_report(D), check_identities(D), nearlattice_check(D)):
            assert rep.ok(), (name, rep.failures())
        if D.has_delta:
            assert skeleton_report(D, "interior").ok(), name
        if D.has_nabla:
            assert skeleton_report(D, "closed").ok(), name


def test_skeleton_report_side_validation(L6):
    with pytest.raises(ValueError):
        skeleton_report(L6, "delta")


def test_skeleton_matches_brute_force(full_corpus):
    for name, D in full_corpus:
        if not D.has_delta:
            continue
        names = D.base.names
        got = frozenset(names[i] for i in D.interior_fixed())
        assert got == oracle.brute_skeleton(D), name


def test_skeleton_algebra_is_ortholattice(L6):
    A = skeleton_algebra(L6, "interior")
    assert A.carrier == ("0", "u", "b", "1")
    assert A.complement_table == {"0": "1", "u": "b", "b": "u", "1": "0"}
    assert A.meet("u", "b") == "0" and A.join("u", "b") == "1"
    # skeleton meet is the interior meet, not the lattice meet
    assert A.meet("u", "1") == "u"


def test_enumeration_finds_known_count():
    assert len(enumerate_dicomplementations(chain(2), side="delta")) == 1
    # a chain admits only the trivial table; the diamond adds the Boolean one
    assert len(enumerate_dicomplementations(chain(4), side="delta")) == 1
    b4 = direct_power(chain(2), 2)
    found = enumerate_dicomplementations(b4, side="delta")
    assert len(found) == 2
    for D in found:
        assert axiom_report(D).ok()
    both = enumerate_dicomplementations(b4, side="both")
    assert len(both) == 4
    for D in both:
        assert axiom_report(D).ok() and check_identities(D).ok()


# --- properties over all small instances --------------------------------------


def _small_instances():
    out = []
    for n in range(1, 6):
        for lat in enumerate_lattices(n):
            out.extend(enumerate_dicomplementations(lat, side="delta"))
    return out


SMALL = _small_instances()


@given(strategies.data())
def test_axiom_one_interior_decreasing(data):
    D = data.draw(strategies.sampled_from(SMALL))
    x = data.draw(strategies.sampled_from(D.base.names))
    lat = D.base
    assert lat.leq(lat.index(D.interior(x)), lat.index(x))
    assert D.interior(D.interior(x)) == D.interior(x)


@given(strategies.data())
def test_axiom_two_antitone(data):
    D = data.draw(strategies.sampled_from(SMALL))
    lat = D.base
    x = data.draw(strategies.sampled_from(lat.names))
    y = data.draw(strategies.sampled_from(lat.names))
    if lat.leq(lat.index(x), lat.index(y)):
        dx, dy = D.weak_complement(x), D.weak_complement(y)
        assert lat.leq(lat.index(dy), lat.index(dx))


@given(strategies.data())
def test_axiom_three_median(data):
    D = data.draw(strategies.sampled_from(SMALL))
    lat = D.base
    x = data.draw(strategies.sampled_from(lat.names))
    y = data.draw(strategies.sampled_from(lat.names))
    i = lat.index
    lhs = lat.join(lat.meet(i(x), i(y)),
                   lat.meet(i(x), i(D.weak_complement(y))))
    assert lhs == i(x)


@given(strategies.data())
def test_complement_laws(data):
    D = data.draw(strategies.sampled_from(SMALL))
    lat = D.base
    x = data.draw(strategies.sampled_from(lat.names))
    i = lat.index
    assert lat.join(i(x), i(D.weak_complement(x))) == lat.top
    assert D.weak_complement(D.interior(x)) == D.weak_complement(x)
