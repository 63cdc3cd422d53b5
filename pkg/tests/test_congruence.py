"""Congruences, filter-induced congruences and the structure theorems."""

import pytest
from hypothesis import given, settings, strategies

from wdlat import (
    Congruence,
    as_filter,
    as_s_filter,
    builtin,
    cong_join,
    cong_meet,
    congruence_from_blocks,
    congruence_witness,
    corpus,
    determination_congruence,
    determination_partition,
    diagonal,
    enumerate_congruences,
    enumerate_s_filters,
    full_congruence,
    is_congruence,
    join_formula_check,
    permutability_check,
    principal_congruence,
    regular,
    structure_checks,
    theta_from_filter,
)
from wdlat.errors import (
    MalformedPartition,
    NotACongruence,
    NotDistributive,
    NotSFilter,
    SizeCapExceeded,
)

import oracle

CORPUS = [(n, D) for n, D in corpus() if D.has_delta]

L6_CON = [
    (("0",), ("u",), ("v",), ("a",), ("b",), ("1",)),
    (("0", "v"), ("u", "a"), ("b",), ("1",)),
    (("0", "u"), ("v", "a"), ("b", "1")),
    (("0", "v", "b"), ("u", "a", "1")),
    (("0", "u", "v", "a"), ("b", "1")),
    (("0", "u", "v", "a", "b", "1"),),
]


# --- enumeration against the brute partition scan -------------------------------


def test_l6_congruence_lattice(L6):
    assert [c.blocks for c in enumerate_congruences(L6)] == L6_CON


def test_l7_is_simple(L7):
    found = enumerate_congruences(L7)
    assert len(found) == 2
    assert found[0].is_diagonal() and found[1].is_full()


def test_enumeration_matches_brute_force(full_corpus):
    for name, D in full_corpus:
        if not D.has_delta:
            continue
        got = {frozenset(frozenset(b) for b in c.blocks)
               for c in enumerate_congruences(D)}
        assert got == oracle.brute_congruences(D), name


def test_boolean_congruence_counts():
    assert len(enumerate_congruences(builtin("B2"))) == 2
    assert len(enumerate_congruences(builtin("B4"))) == 4
    assert len(enumerate_congruences(builtin("B8"))) == 8


def test_congruence_cap(L6):
    with pytest.raises(SizeCapExceeded):
        enumerate_congruences(L6, max_size=4)


# --- the congruence wrapper -------------------------------------------------------


def test_block_access(L6):
    theta = congruence_from_blocks(L6, [["0", "u"], ["v", "a"], ["b", "1"]])
    assert theta.class_of("v") == ("v", "a")
    assert theta.related("b", "1") and not theta.related("u", "v")
    assert theta.cokernel == ("b", "1")
    assert not theta.is_diagonal() and not theta.is_full()
    d = diagonal(L6.base)
    assert d.is_diagonal() and d.subset_of(theta)
    assert theta.subset_of(full_congruence(L6.base))
    assert not theta.subset_of(d)


def test_malformed_partitions(L6):
    with pytest.raises(MalformedPartition):
        congruence_from_blocks(L6, [["0", "u"], ["v", "a"], ["b"]])
    with pytest.raises(MalformedPartition):
        congruence_from_blocks(L6, [["0", "u"], ["u", "v", "a"], ["b", "1"]])


def test_incompatible_partition_rejected(L6):
    blocks = [["a", "b"], ["0"], ["u"], ["v"], ["1"]]
    assert not is_congruence(L6, blocks)
    w = congruence_witness(L6, blocks)
    assert w is not None and w[0] in ("join", "meet", "weak_complement")
    with pytest.raises(NotACongruence):
        congruence_from_blocks(L6, blocks)


def test_example_partitions_validate(L6):
    # the two worked partitions: both are congruences, with S-filter cokernels
    theta = congruence_from_blocks(L6, [["0", "u"], ["b", "1"], ["a", "v"]])
    assert theta.cokernel == ("b", "1")
    psi = congruence_from_blocks(L6, [["0", "b", "v"], ["u", "a", "1"]])
    assert psi.cokernel == ("u", "a", "1")
    assert theta_from_filter(L6, as_s_filter(L6, ["b", "1"])).class_ids == \
        theta.class_ids
    assert theta_from_filter(L6, as_s_filter(L6, ["u", "a", "1"])).class_ids == \
        psi.class_ids


# --- meet, join, principal --------------------------------------------------------


def test_meet_join_on_l6(L6):
    cons = enumerate_congruences(L6)
    pool = {c.class_ids for c in cons}
    for a in cons:
        for b in cons:
            m = cong_meet(a, b)
            j = cong_join(L6, a, b)
            assert m.class_ids in pool and j.class_ids in pool
            assert m.subset_of(a) and m.subset_of(b)
            assert a.subset_of(j) and b.subset_of(j)
            # meet is the largest lower bound, join the least upper bound
            for c in cons:
                if c.subset_of(a) and c.subset_of(b):
                    assert c.subset_of(m)
                if a.subset_of(c) and b.subset_of(c):
                    assert j.subset_of(c)


def test_principal_congruence_is_least(L6):
    theta = principal_congruence(L6, "b", "1")
    assert theta.blocks == (("0", "u"), ("v", "a"), ("b", "1"))
    for c in enumerate_congruences(L6):
        if c.related("b", "1"):
            assert theta.subset_of(c)


_BRUTE_CACHE = {}


def _brute_cons(name, D):
    if name not in _BRUTE_CACHE:
        _BRUTE_CACHE[name] = oracle.brute_congruences(D)
    return _BRUTE_CACHE[name]


@given(strategies.data())
@settings(deadline=None, max_examples=40)
def test_principal_congruence_least_everywhere(data):
    name, D = data.draw(strategies.sampled_from(CORPUS[:4]))
    x = data.draw(strategies.sampled_from(D.base.names))
    y = data.draw(strategies.sampled_from(D.base.names))
    theta = principal_congruence(D, x, y)
    assert theta.related(x, y)
    brute = _brute_cons(name, D)
    got = frozenset(frozenset(b) for b in theta.blocks)
    assert got in brute
    for blocks in brute:
        cls = {e: i for i, blk in enumerate(blocks) for e in blk}
        if cls[x] == cls[y]:
            other = congruence_from_blocks(D, [sorted(b) for b in blocks])
            assert theta.subset_of(other), name


# --- filter induced congruences ----------------------------------------------------


def test_theta_requires_distributivity(L7):
    with pytest.raises(NotDistributive):
        theta_from_filter(L7, as_s_filter(L7, ["a", "1"]))


def test_theta_requires_s_filter(L6):
    with pytest.raises(NotSFilter):
        theta_from_filter(L6, as_filter(L6.base, ["a", "1"]))


def test_theta_f4_blocks(L6):
    theta = theta_from_filter(L6, as_s_filter(L6, ["u", "a", "1"]))
    assert theta.blocks == (("0", "v", "b"), ("u", "a", "1"))


def test_cokernel_roundtrip(full_corpus):
    for name, D in full_corpus:
        if not D.has_delta or not D.base.is_distributive():
            continue
        for S in enumerate_s_filters(D):
            theta = theta_from_filter(D, S)
            assert theta.cokernel == S.members, (name, S.members)


def test_theta_is_least_collapsing(full_corpus):
    for name, D in full_corpus:
        if not D.has_delta or not D.base.is_distributive():
            continue
        cons = enumerate_congruences(D)
        for S in enumerate_s_filters(D):
            theta = theta_from_filter(D, S)
            for c in cons:
                if set(S.members) <= set(c.cokernel):
                    assert theta.subset_of(c), (name, S.members)


def test_theta_monotone(L6):
    sf = enumerate_s_filters(L6)
    for F in sf:
        for G in sf:
            tF = theta_from_filter(L6, F)
            tG = theta_from_filter(L6, G)
            assert F.subset_of(G) == tF.subset_of(tG)


# --- determination partition --------------------------------------------------------


def test_determination_on_l6(L6):
    assert determination_partition(L6) == \
        (("0", "v"), ("u", "a"), ("b",), ("1",))
    phi = determination_congruence(L6)
    assert phi.blocks == (("0", "v"), ("u", "a"), ("b",), ("1",))
    assert not regular(L6)


def test_determination_not_always_a_congruence(L7):
    # all elements with weak complement 1 fall in one class, which join
    # translation then tears apart
    assert determination_partition(L7) == \
        (("0", "u", "v", "w"), ("a",), ("b",), ("1",))
    assert not is_congruence(L7, determination_partition(L7))
    with pytest.raises(NotACongruence):
        determination_congruence(L7)


def test_determination_trivial_table():
    D = builtin("L6-trivial")
    assert determination_partition(D) == (("0", "u", "v", "a", "b"), ("1",))
    with pytest.raises(NotACongruence):
        determination_congruence(D)
    w = congruence_witness(D, determination_partition(D))
    assert w is not None and w[0] == "join"


def test_boolean_determination_is_diagonal():
    for name in ("B2", "B4", "B8"):
        D = builtin(name)
        phi = determination_congruence(D)
        assert phi.is_diagonal()
        assert regular(D)


def test_regularity_on_corpus(full_corpus):
    # regular means no two distinct congruences share a class
    for name, D in full_corpus:
        if not D.has_delta:
            continue
        cons = enumerate_congruences(D)
        shared = any(
            set(a.block_masks) & set(b.block_masks)
            for i, a in enumerate(cons) for b in cons[i + 1:])
        assert regular(D) == (not shared), name


# --- reports ---------------------------------------------------------------------


def test_structure_checks_clean_on_l6(L6):
    rep = structure_checks(L6)
    assert rep.ok()
    assert rep.counts()["fail"] == 0 and rep.counts()["finding"] == 0


def test_structure_findings_on_trivial_table():
    rep = structure_checks(builtin("L6-trivial"))
    assert rep.ok()
    found = {r.law_id for r in rep.results if r.status == "finding"}
    assert "determination.is-congruence" in found
    assert "cong.two-element-skeleton" in found


def test_structure_skips_on_nondistributive(L7):
    rep = structure_checks(L7)
    assert rep.ok()
    skipped = {r.law_id for r in rep.results if r.status == "skip"}
    assert "theta.cokernel-roundtrip" in skipped
    notes = {r.note for r in rep.results if r.status == "skip"}
    assert "the base lattice is not distributive" in notes


def test_reports_never_fail_on_corpus(full_corpus):
    for name, D in full_corpus:
        if not D.has_delta:
            continue
        for rep in (structure_checks(D), join_formula_check(D),
                    permutability_check(D)):
            assert rep.ok(), (name, rep.subject, rep.failures())


def test_join_and_permutability_zero_tolerance(full_corpus):
    # on distributive instances nothing may be skipped or demoted
    for name, D in full_corpus:
        if not D.has_delta or not D.base.is_distributive():
            continue
        for rep in (join_formula_check(D), permutability_check(D)):
            counts = rep.counts()
            assert counts["fail"] == 0 and counts["finding"] == 0, name
            assert counts["pass"] >= 1, name


def test_birkhoff_against_brute_force(full_corpus):
    # subdirect irreducibility via unique atom equals the brute intersection test
    for name, D in full_corpus:
        if not D.has_delta:
            continue
        cons = enumerate_congruences(D)
        nontrivial = [c for c in cons if not c.is_diagonal()]
        if not nontrivial:
            continue
        inter = nontrivial[0]
        for c in nontrivial[1:]:
            inter = cong_meet(inter, c)
        atoms = [c for c in nontrivial
                 if not any(o.subset_of(c) and o.class_ids != c.class_ids
                            for o in nontrivial)]
        assert (not inter.is_diagonal()) == (len(atoms) == 1), name
