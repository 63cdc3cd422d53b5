"""Congruences of a weakly complemented lattice.

Everything here works in the (join, meet, weak complement) signature.
Congruences are canonical partitions; the module builds the congruence
generated by a pair or by an S-filter, enumerates the whole congruence
lattice by closing the principal ones under join, and turns the
structure theory (cokernels, the determination congruence, regularity,
permutability, simplicity, subdirect irreducibility) into law reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .dicomplement import Dicomplementation
from .errors import (MalformedPartition, NotACongruence, NotDistributive,
                     NotSFilter)
from .filters import Filter
from .lattice import BoundedLattice, bits, is_subset
from .reports import FINDING, Report, law
from .sfilters import (_mi_witness, _s_generated_mask, _skeleton_mask,
                       enumerate_s_filters)

CONGRUENCE_CAP = 12


@dataclass(frozen=True)
class Congruence:
    """A compatible partition, stored as a class id per element index.

    Ids are canonical: blocks are numbered in order of their smallest
    member, so equal partitions compare equal.
    """

    base: BoundedLattice
    class_ids: tuple[int, ...]

    @property
    def block_masks(self) -> tuple[int, ...]:
        out: dict[int, int] = {}
        for i, c in enumerate(self.class_ids):
            out[c] = out.get(c, 0) | 1 << i
        return tuple(out[c] for c in sorted(out))

    @property
    def blocks(self) -> tuple[tuple[str, ...], ...]:
        return tuple(self.base.names_of(m) for m in self.block_masks)

    def class_of(self, x: str) -> tuple[str, ...]:
        i = self.base.index(x)
        return self.base.names_of(self.block_masks[self.class_ids[i]])

    @property
    def cokernel(self) -> tuple[str, ...]:
        """The class of the top element."""
        return self.class_of(self.base.names[self.base.top])

    def related(self, x: str, y: str) -> bool:
        return self.class_ids[self.base.index(x)] \
            == self.class_ids[self.base.index(y)]

    def is_diagonal(self) -> bool:
        return len(set(self.class_ids)) == self.base.n

    def is_full(self) -> bool:
        return len(set(self.class_ids)) == 1

    def subset_of(self, other: "Congruence") -> bool:
        """Refinement: every class of self sits inside a class of other."""
        seen: dict[int, int] = {}
        for c, o in zip(self.class_ids, other.class_ids):
            if seen.setdefault(c, o) != o:
                return False
        return True

    def pair_count(self) -> int:
        return sum(bin(m).count("1") ** 2 for m in self.block_masks)

    def as_dict(self) -> dict:
        return {"blocks": [list(b) for b in self.blocks]}

    def __repr__(self) -> str:
        body = "|".join(",".join(b) for b in self.blocks)
        return f"Congruence({body})"


def _canonical_ids(n: int, parent_of) -> tuple[int, ...]:
    ids: dict[int, int] = {}
    out = []
    for i in range(n):
        r = parent_of(i)
        out.append(ids.setdefault(r, len(ids)))
    return tuple(out)


def _partition_masks(lat: BoundedLattice, blocks) -> list[int]:
    masks = []
    seen = 0
    for block in blocks:
        m = lat.mask_of_names(block)
        if m == 0:
            raise MalformedPartition("empty block")
        if m & seen:
            raise MalformedPartition(
                f"element {lat.set_name(m & seen)} appears in two blocks")
        seen |= m
        masks.append(m)
    if seen != lat.full_mask:
        raise MalformedPartition(
            f"elements {lat.set_name(lat.full_mask & ~seen)} are not covered")
    return masks


def _ids_of_masks(lat: BoundedLattice, masks: Iterable[int]) -> tuple[int, ...]:
    owner = {}
    for k, m in enumerate(masks):
        for i in bits(m):
            owner[i] = k
    order: dict[int, int] = {}
    return tuple(order.setdefault(owner[i], len(order)) for i in range(lat.n))


def congruence_witness(D: Dicomplementation,
                       blocks) -> tuple[str, ...] | None:
    """First compatibility violation of the partition, or None.

    The witness names the operation, the related pair and, for the
    binary operations, the translating element.
    """
    lat = D.base
    d = D._need("delta")
    ids = _ids_of_masks(lat, _partition_masks(lat, blocks))
    for x in range(lat.n):
        for y in range(x + 1, lat.n):
            if ids[x] != ids[y]:
                continue
            if ids[d[x]] != ids[d[y]]:
                return ("weak_complement", lat.names[x], lat.names[y])
            for z in range(lat.n):
                if ids[lat.join(x, z)] != ids[lat.join(y, z)]:
                    return ("join", lat.names[x], lat.names[y], lat.names[z])
                if ids[lat.meet(x, z)] != ids[lat.meet(y, z)]:
                    return ("meet", lat.names[x], lat.names[y], lat.names[z])
    return None


def is_congruence(D: Dicomplementation, blocks) -> bool:
    """Whether the partition is compatible with join, meet and ^d."""
    return congruence_witness(D, blocks) is None


def congruence_from_blocks(D: Dicomplementation, blocks) -> Congruence:
    """Wrap and validate an explicit partition."""
    lat = D.base
    ids = _ids_of_masks(lat, _partition_masks(lat, blocks))
    w = congruence_witness(D, blocks)
    if w is not None:
        raise NotACongruence(f"partition is not compatible with {w[0]}", w)
    return Congruence(lat, ids)


def diagonal(lat: BoundedLattice) -> Congruence:
    return Congruence(lat, tuple(range(lat.n)))


def full_congruence(lat: BoundedLattice) -> Congruence:
    return Congruence(lat, (0,) * lat.n)


# --- generation ----------------------------------------------------------------


def _congruence_closure(D: Dicomplementation,
                        pairs: Iterable[tuple[int, int]]) -> tuple[int, ...]:
    """Least congruence containing the pairs: union-find plus translations."""
    lat = D.base
    d = D._need("delta")
    parent = list(range(lat.n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i: int, j: int) -> bool:
        ri, rj = find(i), find(j)
        if ri == rj:
            return False
        parent[max(ri, rj)] = min(ri, rj)
        return True

    for i, j in pairs:
        union(i, j)
    changed = True
    while changed:
        changed = False
        for x in range(lat.n):
            for y in range(x + 1, lat.n):
                if find(x) != find(y):
                    continue
                if union(d[x], d[y]):
                    changed = True
                for z in range(lat.n):
                    if union(lat.join(x, z), lat.join(y, z)):
                        changed = True
                    if union(lat.meet(x, z), lat.meet(y, z)):
                        changed = True
    return _canonical_ids(lat.n, find)


def principal_congruence(D: Dicomplementation, a: str, b: str,
                         max_size: int = CONGRUENCE_CAP) -> Congruence:
    """The least congruence relating a and b."""
    lat = _capped(D, max_size)
    return Congruence(lat, _congruence_closure(
        D, [(lat.index(a), lat.index(b))]))


def _capped(D: Dicomplementation, max_size: int) -> BoundedLattice:
    lat = D.base
    if lat.n > max_size:
        from .errors import SizeCapExceeded
        raise SizeCapExceeded(
            f"congruence enumeration capped at {max_size} elements, "
            f"lattice has {lat.n}")
    return lat


def cong_meet(a: Congruence, b: Congruence) -> Congruence:
    """Common refinement; always a congruence."""
    combo = {}
    ids = tuple(combo.setdefault((x, y), len(combo))
                for x, y in zip(a.class_ids, b.class_ids))
    return Congruence(a.base, ids)


def cong_join(D: Dicomplementation, a: Congruence, b: Congruence) -> Congruence:
    """Least congruence containing both."""
    seeds = [(i, j) for rows in (_block_pairs(a), _block_pairs(b))
             for i, j in rows]
    return Congruence(a.base, _congruence_closure(D, seeds))


def _block_pairs(c: Congruence) -> list[tuple[int, int]]:
    out = []
    for m in c.block_masks:
        members = list(bits(m))
        out.extend((members[0], j) for j in members[1:])
    return out


def enumerate_congruences(D: Dicomplementation,
                          max_size: int = CONGRUENCE_CAP) -> list[Congruence]:
    """Con(L): principal congruences closed under join, plus the diagonal."""
    lat = _capped(D, max_size)
    found = {diagonal(lat)}
    for i in range(lat.n):
        for j in range(i + 1, lat.n):
            found.add(Congruence(lat, _congruence_closure(D, [(i, j)])))
    frontier = list(found)
    while frontier:
        fresh = []
        for a in frontier:
            for b in list(found):
                c = cong_join(D, a, b)
                if c not in found:
                    found.add(c)
                    fresh.append(c)
        frontier = fresh
    return sorted(found, key=lambda c: (c.pair_count(), c.class_ids))


# --- congruences from S-filters --------------------------------------------------


def theta_from_filter(D: Dicomplementation, F: Filter) -> Congruence:
    """The least congruence collapsing the S-filter F, on a distributive base.

    Pairs are related when some u in F gives x | u^d = y | u^d.
    """
    lat = D.base
    d = D._need("delta")
    if not lat.is_distributive():
        raise NotDistributive(
            "filter-induced congruences need a distributive base lattice")
    if F.base != lat or _mi_witness(D, F.mask) is not None:
        raise NotSFilter(f"{lat.set_name(F.mask)} is not an S-filter")

    def related(x: int, y: int) -> bool:
        return any(lat.join(x, d[u]) == lat.join(y, d[u]) for u in bits(F.mask))

    pairs = [(x, y) for x in range(lat.n) for y in range(x + 1, lat.n)
             if related(x, y)]
    ids = _canonical_ids(lat.n, _union_find_of(lat.n, pairs))
    for x in range(lat.n):
        for y in range(x + 1, lat.n):
            if (ids[x] == ids[y]) != related(x, y):
                raise NotACongruence(
                    "the induced relation is not transitive",
                    (lat.names[x], lat.names[y]))
    cong = Congruence(lat, ids)
    w = congruence_witness(D, cong.blocks)
    if w is not None:
        raise NotACongruence(f"the induced relation breaks {w[0]}", w)
    return cong


def _union_find_of(n: int, pairs):
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in pairs:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    return find


def determination_partition(D: Dicomplementation) -> tuple[tuple[str, ...], ...]:
    """Blocks of equal weak complement, whether or not they form a congruence."""
    lat = D.base
    d = D._need("delta")
    groups: dict[int, int] = {}
    for i in range(lat.n):
        groups[d[i]] = groups.get(d[i], 0) | 1 << i
    masks = sorted(groups.values(), key=lambda m: m & -m)
    return tuple(lat.names_of(m) for m in masks)


def determination_congruence(D: Dicomplementation) -> Congruence:
    """The equal-complement congruence; raises when it fails compatibility."""
    return congruence_from_blocks(D, determination_partition(D))


def regular(D: Dicomplementation, max_size: int = CONGRUENCE_CAP) -> bool:
    """No two distinct congruences share an equivalence class."""
    cons = enumerate_congruences(D, max_size)
    for a, b in combinations(cons, 2):
        if set(a.block_masks) & set(b.block_masks):
            return False
    return True


# --- relational products ---------------------------------------------------------


def _rows(c: Congruence) -> tuple[int, ...]:
    masks = c.block_masks
    return tuple(masks[c.class_ids[i]] for i in range(c.base.n))


def _compose(rows_a: tuple[int, ...], rows_b: tuple[int, ...]) -> tuple[int, ...]:
    """Rows of the relational product: a-step then b-step."""
    out = []
    for i in range(len(rows_a)):
        m = 0
        for j in bits(rows_a[i]):
            m |= rows_b[j]
        out.append(m)
    return tuple(out)


# --- law reports ------------------------------------------------------------------

law("cong.cokernel-is-sfilter", "the class of 1 is an S-filter, for every congruence")
law("cong.cokernel-generated",
    "the class of 1 is the S-filter generated by its skeleton part")
law("cong.zero-one-collapse", "a congruence relating 0 and 1 is the full relation")
law("cong.two-element-skeleton",
    "with a two element skeleton, every congruence is full or has classes "
    "[0] = {0} and [1] = {1}")
law("cong.two-element-skeleton-cokernel",
    "with a two element skeleton, every proper congruence has cokernel {1}")
law("cong.distributive", "the congruence lattice is distributive")
law("determination.is-congruence",
    "grouping by equal weak complement is a congruence")
law("determination.skeleton-diagonal",
    "equal weak complements separate skeleton elements")
law("determination.largest-skeleton-diagonal",
    "a congruence diagonal on the skeleton refines the determination partition")
law("determination.zero-separating-bound",
    "a congruence with [0] = {0} refines the determination partition")
law("cong.regular-iff-phi-diagonal",
    "regularity is equivalent to a diagonal determination partition")
law("phi-diag.regular",
    "under a diagonal determination partition, congruences sharing a class "
    "are equal")
law("theta.cokernel-roundtrip", "the class of 1 under theta_F is F itself")
law("theta.least", "theta_F refines every congruence collapsing F")
law("theta.monotone-iff", "F subset of G exactly when theta_F refines theta_G")
law("theta.join-formula",
    "theta_F join Psi equals the product theta_F o Psi o theta_F")
law("theta.permute", "congruences induced by S-filters commute")
law("cong.product-congruence-iff-permute",
    "the relational product is a congruence exactly when the two commute")
law("phi-diag.cokernel-faithful",
    "under a diagonal determination partition, only the diagonal has cokernel {1}")
law("phi-diag.con-iso-sfilters",
    "under a diagonal determination partition, F -> theta_F is an order "
    "isomorphism onto the congruence lattice")
law("phi-diag.monolith",
    "under a diagonal determination partition, the meets of nontrivial "
    "congruences and of nontrivial theta_F agree")
law("phi-diag.sdi-unique-atom",
    "under a diagonal determination partition, subdirect irreducibility "
    "is a unique atom in the S-filter lattice")
law("phi-diag.simple-two-sfilters",
    "under a diagonal determination partition, simplicity is having "
    "exactly two S-filters")
law("birkhoff.sdi",
    "the nontrivial congruences meet above the diagonal exactly when the "
    "congruence lattice has a unique atom")

_SKIP_DIST = "the base lattice is not distributive"


def join_formula_check(D: Dicomplementation,
                       max_size: int = CONGRUENCE_CAP) -> Report:
    """theta_F join Psi as a threefold relational product."""
    lat = D.base
    rep = Report(subject="congruence join")
    if not lat.is_distributive():
        rep.skip("theta.join-formula", _SKIP_DIST)
        return rep
    cons = enumerate_congruences(D, max_size)
    sfs = enumerate_s_filters(D)
    witness = None
    for F in sfs:
        th = _rows(theta_from_filter(D, F))
        for psi in cons:
            rp = _rows(psi)
            pr = _compose(_compose(th, rp), th)
            joined = _rows(Congruence(lat, _congruence_closure(
                D, [(i, j) for i in range(lat.n)
                    for j in bits(th[i] | rp[i])])))
            if pr != joined:
                witness = (lat.set_name(F.mask), "|".join(
                    ",".join(b) for b in psi.blocks))
                break
        if witness:
            break
    rep.add("theta.join-formula", witness is None, witness)
    return rep


def permutability_check(D: Dicomplementation,
                        max_size: int = CONGRUENCE_CAP) -> Report:
    """Commutation of the induced congruences, and the product criterion."""
    lat = D.base
    rep = Report(subject="congruence permutability")
    if not lat.is_distributive():
        rep.skip("theta.permute", _SKIP_DIST)
    else:
        sfs = enumerate_s_filters(D)
        thetas = [_rows(theta_from_filter(D, F)) for F in sfs]
        witness = None
        for F, a in zip(sfs, thetas):
            for G, b in zip(sfs, thetas):
                if _compose(a, b) != _compose(b, a):
                    witness = (lat.set_name(F.mask), lat.set_name(G.mask))
                    break
            if witness:
                break
        rep.add("theta.permute", witness is None, witness)

    cons = enumerate_congruences(D, max_size)
    witness = None
    for a in cons:
        ra = _rows(a)
        for b in cons:
            rb = _rows(b)
            ab = _compose(ra, rb)
            permute = ab == _compose(rb, ra)
            symmetric = all(ab[j] >> i & 1
                            for i in range(lat.n) for j in bits(ab[i]))
            transitive = _compose(ab, ab) == ab
            if permute != (symmetric and transitive):
                witness = ("|".join(",".join(x) for x in a.blocks),
                           "|".join(",".join(x) for x in b.blocks))
                break
        if witness:
            break
    rep.add("cong.product-congruence-iff-permute", witness is None, witness)
    return rep


def structure_checks(D: Dicomplementation,
                     max_size: int = CONGRUENCE_CAP) -> Report:
    """Cokernels, the determination partition, regularity, SDI, simplicity."""
    lat = D.base
    d = D._need("delta")
    rep = Report(subject="congruence structure")
    skel = _skeleton_mask(D)
    top_only = 1 << lat.top
    cons = enumerate_congruences(D, max_size)
    sfs = enumerate_s_filters(D)
    s_set = {f.mask for f in sfs}
    distributive = lat.is_distributive()

    def cok_mask(c: Congruence) -> int:
        return c.block_masks[c.class_ids[lat.top]]

    def blocks_str(c: Congruence) -> str:
        return "|".join(",".join(b) for b in c.blocks)

    witness = next(((blocks_str(c),) for c in cons
                    if cok_mask(c) not in s_set), None)
    rep.add("cong.cokernel-is-sfilter", witness is None, witness)

    witness = None
    for c in cons:
        cok = cok_mask(c)
        if cok & skel == 0 or _s_generated_mask(D, cok & skel) != cok:
            witness = (blocks_str(c),)
            break
    rep.add("cong.cokernel-generated", witness is None, witness)

    witness = next(((blocks_str(c),) for c in cons
                    if c.class_ids[lat.bottom] == c.class_ids[lat.top]
                    and not c.is_full()), None)
    rep.add("cong.zero-one-collapse", witness is None, witness)

    # The [0] = {0} half can fail: an element with interior 0 need not be 0,
    # so a proper congruence may still glue extra elements onto 0.
    two = bin(skel).count("1") == 2
    witness = next(((blocks_str(c),) for c in cons
                    if two and not c.is_full()
                    and (c.block_masks[c.class_ids[lat.bottom]] != 1 << lat.bottom
                         or cok_mask(c) != top_only)), None)
    rep.add("cong.two-element-skeleton", witness is None, witness,
            note="" if two else "vacuous: the skeleton is larger",
            on_fail=FINDING)
    witness = next(((blocks_str(c),) for c in cons
                    if two and not c.is_full() and cok_mask(c) != top_only),
                   None)
    rep.add("cong.two-element-skeleton-cokernel", witness is None, witness,
            note="" if two else "vacuous: the skeleton is larger")

    witness = None
    for a in cons:
        for b in cons:
            for c in cons:
                lhs = cong_meet(a, cong_join(D, b, c))
                rhs = cong_join(D, cong_meet(a, b), cong_meet(a, c))
                if lhs != rhs:
                    witness = (blocks_str(a), blocks_str(b), blocks_str(c))
                    break
            if witness:
                break
        if witness:
            break
    rep.add("cong.distributive", witness is None, witness)

    phi_blocks = determination_partition(D)
    w = congruence_witness(D, phi_blocks)
    rep.add("determination.is-congruence", w is None, w, on_fail=FINDING)
    phi_ids = _ids_of_masks(lat, [lat.mask_of_names(b) for b in phi_blocks])
    phi_diag = len(set(phi_ids)) == lat.n

    witness = next(((lat.names[x], lat.names[y])
                    for x in bits(skel) for y in bits(skel)
                    if x < y and d[x] == d[y]), None)
    rep.add("determination.skeleton-diagonal", witness is None, witness)

    def below_phi(c: Congruence) -> bool:
        return all(phi_ids[x] == phi_ids[y]
                   for x in range(lat.n) for y in range(lat.n)
                   if c.class_ids[x] == c.class_ids[y])

    witness = next(((blocks_str(c),) for c in cons
                    if all(c.class_ids[x] != c.class_ids[y]
                           for x in bits(skel) for y in bits(skel) if x < y)
                    and not below_phi(c)), None)
    rep.add("determination.largest-skeleton-diagonal", witness is None, witness)

    witness = next(((blocks_str(c),) for c in cons
                    if c.block_masks[c.class_ids[lat.bottom]] == 1 << lat.bottom
                    and not below_phi(c)), None)
    rep.add("determination.zero-separating-bound", witness is None, witness)

    # Only the backward direction is sound: a regular algebra can still have
    # a non diagonal determination partition when that partition is not a
    # congruence in the first place.
    if distributive:
        shared = any(set(a.block_masks) & set(b.block_masks)
                     for a, b in combinations(cons, 2))
        rep.add("cong.regular-iff-phi-diagonal", (not shared) == phi_diag,
                (f"regular={not shared}", f"diagonal={phi_diag}"),
                on_fail=FINDING)
    else:
        rep.skip("cong.regular-iff-phi-diagonal", _SKIP_DIST)

    if distributive:
        thetas = {F.mask: theta_from_filter(D, F) for F in sfs}
        witness = next(((lat.set_name(m),) for m, th in thetas.items()
                        if cok_mask(th) != m), None)
        rep.add("theta.cokernel-roundtrip", witness is None, witness)
        witness = None
        for m, th in thetas.items():
            for c in cons:
                if is_subset(m, cok_mask(c)) and not th.subset_of(c):
                    witness = (lat.set_name(m), blocks_str(c))
                    break
            if witness:
                break
        rep.add("theta.least", witness is None, witness)
        witness = next(
            ((lat.set_name(a), lat.set_name(b)) for a in thetas for b in thetas
             if is_subset(a, b) != thetas[a].subset_of(thetas[b])), None)
        rep.add("theta.monotone-iff", witness is None, witness)
    else:
        for law_id in ("theta.cokernel-roundtrip", "theta.least",
                       "theta.monotone-iff"):
            rep.skip(law_id, _SKIP_DIST)

    nontrivial = [c for c in cons if not c.is_diagonal()]
    meet_nontrivial = full_congruence(lat)
    for c in nontrivial:
        meet_nontrivial = cong_meet(meet_nontrivial, c)
    atoms = [c for c in nontrivial
             if not any(o != c and o.subset_of(c) for o in nontrivial)]
    sdi = lat.n > 1 and bool(nontrivial) and not meet_nontrivial.is_diagonal()
    rep.add("birkhoff.sdi", sdi == (lat.n > 1 and len(atoms) == 1),
            (f"meet-nontrivial-diagonal={meet_nontrivial.is_diagonal()}",
             f"atoms={len(atoms)}"))

    phi_note = "the determination partition is not the diagonal here"
    gated = ("phi-diag.regular", "phi-diag.cokernel-faithful",
             "phi-diag.con-iso-sfilters", "phi-diag.monolith",
             "phi-diag.sdi-unique-atom", "phi-diag.simple-two-sfilters")
    if not distributive:
        for law_id in gated:
            rep.skip(law_id, _SKIP_DIST)
    elif not phi_diag:
        for law_id in gated:
            rep.skip(law_id, phi_note)
    else:
        witness = next(((blocks_str(a), blocks_str(b))
                        for a, b in combinations(cons, 2)
                        if set(a.block_masks) & set(b.block_masks)), None)
        rep.add("phi-diag.regular", witness is None, witness)

        witness = next(((blocks_str(c),) for c in cons
                        if (cok_mask(c) == top_only) != c.is_diagonal()), None)
        rep.add("phi-diag.cokernel-faithful", witness is None, witness)

        thetas = {F.mask: theta_from_filter(D, F) for F in sfs}
        iso = len(thetas) == len(cons) \
            and set(thetas.values()) == set(cons) \
            and all((is_subset(a, b)) == thetas[a].subset_of(thetas[b])
                    for a in thetas for b in thetas)
        rep.add("phi-diag.con-iso-sfilters", iso)

        meet_thetas = full_congruence(lat)
        for m, th in thetas.items():
            if m != top_only:
                meet_thetas = cong_meet(meet_thetas, th)
        rep.add("phi-diag.monolith", meet_thetas == meet_nontrivial)

        proper_sf = [m for m in s_set if m != top_only]
        sf_atoms = [m for m in proper_sf
                    if not any(o != m and is_subset(o, m) for o in proper_sf)]
        rep.add("phi-diag.sdi-unique-atom", sdi == (len(sf_atoms) == 1),
                (f"sdi={sdi}", f"sfilter-atoms={len(sf_atoms)}"))
        rep.add("phi-diag.simple-two-sfilters",
                (len(cons) == 2) == (len(s_set) == 2),
                (f"congruences={len(cons)}", f"sfilters={len(s_set)}"))
    return rep
