"""S-filters: filters closed under the interior meet.

A filter need not contain x^dd together with x, and the classical
filter join of two well-behaved filters can lose the property, so the
class gets its own join.  The module evaluates the three equivalent
membership conditions independently, extends a filter of the interior
skeleton to the whole lattice, generates S-filters, and checks that
skeleton filters and S-filters are two pictures of one structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .dicomplement import Dicomplementation
from .errors import (BaseMismatch, EmptyGenerator, NotASkeletonFilter,
                     NotSFilter, SizeCapExceeded)
from .filters import (FILTER_CAP, SUBSET_SCAN_CAP, Filter, as_filter,
                      enumerate_filters, star_bar_mask, star_mask)
from .lattice import bits, is_subset
from .reports import FINDING, Report, law


@dataclass(frozen=True)
class SFilter(Filter):
    """A filter closed under meet_interior; x in F forces x^dd in F."""

    def __repr__(self) -> str:
        return f"SFilter({self.base.set_name(self.mask)})"


# --- membership conditions ---------------------------------------------------


def _skeleton_mask(D: Dicomplementation) -> int:
    return sum(1 << i for i in D.interior_fixed())


def _mi_witness(D: Dicomplementation, mask: int) -> tuple[int, int] | None:
    """First pair (x = y allowed) whose interior meet escapes the set."""
    d = D._need("delta")
    lat = D.base
    for i in bits(mask):
        for j in bits(mask):
            if j > i:
                break
            if not mask >> d[lat.join(d[i], d[j])] & 1:
                return (i, j)
    return None


def dagger_witness(D: Dicomplementation, F: Filter) -> tuple[str, str, str] | None:
    """A violating instance of closure under meet_interior, or None."""
    w = _mi_witness(D, F.mask)
    if w is None:
        return None
    i, j = w
    lat = D.base
    return (lat.names[i], lat.names[j], D.meet_interior(lat.names[i], lat.names[j]))


def _is_skeleton_filter_mask(D: Dicomplementation, mask: int) -> bool:
    lat = D.base
    d = D._need("delta")
    skel = _skeleton_mask(D)
    if mask == 0 or mask & ~skel or not mask >> lat.top & 1:
        return False
    for i in bits(mask):
        if lat.up[i] & skel & ~mask:
            return False
        for j in bits(mask):
            if j > i:
                break
            if not mask >> d[lat.join(d[i], d[j])] & 1:
                return False
    return True


def is_skeleton_filter(D: Dicomplementation, G: Iterable[str]) -> bool:
    """Whether G is a filter of the interior skeleton algebra."""
    return _is_skeleton_filter_mask(D, D.base.mask_of_names(G))


def skeleton_filter_masks(D: Dicomplementation,
                          max_size: int = FILTER_CAP) -> tuple[int, ...]:
    """Masks of all filters of the interior skeleton, smallest first."""
    lat = D.base
    skel = _skeleton_mask(D)
    if bin(skel).count("1") > max_size:
        raise SizeCapExceeded(
            f"skeleton filter enumeration capped at {max_size} elements")
    found = []
    m = skel
    while True:
        if _is_skeleton_filter_mask(D, m):
            found.append(m)
        if m == 0:
            break
        m = (m - 1) & skel
    found.sort(key=lambda x: (bin(x).count("1"), x))
    return tuple(found)


def _extension_mask(D: Dicomplementation, gmask: int) -> int:
    """{x | x^dd in G}: the filter of L a skeleton filter G spreads to."""
    lat = D.base
    d = D._need("delta")
    return sum(1 << x for x in range(lat.n) if gmask >> d[d[x]] & 1)


def s_conditions(D: Dicomplementation, F: Filter) -> tuple[bool, bool, bool]:
    """The three membership tests, each computed from scratch.

    Returned as (closure under meet_interior, extension of the trace,
    existence of a skeleton filter base).  They agree on every filter;
    a disagreement would falsify the equivalence proposition and is
    surfaced by phi_iso_check as a finding.
    """
    lat = D.base
    if F.base != lat:
        raise BaseMismatch("the filter lives over a different lattice")
    dagger = _mi_witness(D, F.mask) is None
    trace_mask = F.mask & _skeleton_mask(D)
    ddagger = _is_skeleton_filter_mask(D, trace_mask) \
        and _extension_mask(D, trace_mask) == F.mask
    dagger_ddagger = any(
        lat.upward_closure(g) == F.mask for g in skeleton_filter_masks(D))
    return (dagger, ddagger, dagger_ddagger)


def is_s_filter(D: Dicomplementation, F: Filter) -> bool:
    return F.base == D.base and _mi_witness(D, F.mask) is None


def as_s_filter(D: Dicomplementation, names: Iterable[str]) -> SFilter:
    """Wrap an explicit member list, validating the S-filter invariants."""
    F = as_filter(D.base, names)
    w = dagger_witness(D, F)
    if w is not None:
        x, y, value = w
        raise NotSFilter(
            f"{x} meet_interior {y} = {value} escapes {D.base.set_name(F.mask)}")
    return SFilter(D.base, F.mask)


# --- construction ------------------------------------------------------------


def f_from_skeleton_filter(D: Dicomplementation, G: Iterable[str]) -> SFilter:
    """The S-filter {x | x^dd in G} extending a skeleton filter G."""
    lat = D.base
    gmask = lat.mask_of_names(G)
    if not _is_skeleton_filter_mask(D, gmask):
        raise NotASkeletonFilter(
            f"{lat.set_name(gmask)} is not a filter of the interior skeleton")
    return SFilter(lat, _extension_mask(D, gmask))


def trace(D: Dicomplementation, F: Filter) -> tuple[str, ...]:
    """F meet the interior skeleton; a skeleton filter when F is an S-filter."""
    return D.base.names_of(F.mask & _skeleton_mask(D))


def _s_generated_mask(D: Dicomplementation, seed: int) -> int:
    """Close under binary meet_interior, then upward."""
    lat = D.base
    d = D._need("delta")
    closed = seed
    while True:
        grown = closed
        members = list(bits(closed))
        for i in members:
            for j in members:
                if j > i:
                    break
                grown |= 1 << d[lat.join(d[i], d[j])]
        if grown == closed:
            break
        closed = grown
    return lat.upward_closure(closed)


def s_filter_generated(D: Dicomplementation, X: Iterable[str]) -> SFilter:
    """S[X), the least S-filter containing X."""
    seed = D.base.mask_of_names(X)
    if seed == 0:
        raise EmptyGenerator("a generated S-filter needs a nonempty generator")
    return SFilter(D.base, _s_generated_mask(D, seed))


def s_join(D: Dicomplementation, F: Filter, G: Filter) -> SFilter:
    """The join inside the S-filter family: S[F union G)."""
    lat = D.base
    if F.base != lat or G.base != lat:
        raise BaseMismatch("filters live over a different lattice")
    return SFilter(lat, _s_generated_mask(D, F.mask | G.mask))


def s_principal(D: Dicomplementation, a: str) -> SFilter:
    """S[a) = [a^dd), the principal S-filter of a."""
    lat = D.base
    d = D._need("delta")
    return SFilter(lat, lat.up[d[d[lat.index(a)]]])


def enumerate_s_filters(D: Dicomplementation,
                        max_size: int = FILTER_CAP) -> list[SFilter]:
    """Every S-filter, by size then by mask."""
    fl = enumerate_filters(D, max_size)
    return [SFilter(f.base, f.mask) for f in fl
            if _mi_witness(D, f.mask) is None]


# --- the skeleton filter correspondence --------------------------------------

law("sfilter.conditions-agree",
    "the three S-filter membership tests agree on every filter")
law("sfilter.intersection-closed", "S-filters are closed under intersection")
law("sfilter.sjoin-closed", "S-filters are closed under the S-join")
law("sfilter.generated-least", "S[X) is the least S-filter containing X")
law("sfilter.generation-monotone", "S[X) grows when X grows")
law("phi.injective", "G -> F_G is injective on skeleton filters")
law("phi.order-embedding", "G1 subset of G2 exactly when F_G1 subset of F_G2")
law("phi.image-is-sfilters", "the extensions F_G are exactly the S-filters")
law("phi.bounds", "the skeleton extends to L and {1} extends to {1}")
law("phi.trace-roundtrip",
    "trace(F_G) = G, and the trace of an S-filter extends back to it")
law("phi.star-equivariant",
    "G* = (F_G)* = F_(G*), with the inner star taken in the skeleton")
law("phi.meet-preserved", "F_(G1 meet G2) = F_G1 meet F_G2")
law("phi.join-preserved",
    "the skeleton filter join extends to the S-join of the extensions")
law("phi.closed-parts-correspond",
    "G is closed under the doubled skeleton star iff F_G is star-star closed")


def _skeleton_filter_join(D: Dicomplementation, g1: int, g2: int) -> int:
    """Filter join computed inside the skeleton algebra."""
    lat = D.base
    d = D._need("delta")
    skel = _skeleton_mask(D)
    out = 0
    for i in bits(g1):
        for j in bits(g2):
            out |= lat.up[d[lat.join(d[i], d[j])]] & skel
    return out


def phi_iso_check(D: Dicomplementation, max_size: int = FILTER_CAP) -> Report:
    """The correspondence G -> F_G between skeleton filters and S-filters."""
    d = D._need("delta")
    lat = D.base
    rep = Report(subject="S-filters")
    fl = enumerate_filters(D, max_size)
    skel = _skeleton_mask(D)
    s_masks = [f.mask for f in fl if _mi_witness(D, f.mask) is None]
    s_set = set(s_masks)
    gs = skeleton_filter_masks(D)
    ext = {g: _extension_mask(D, g) for g in gs}
    top_only = 1 << lat.top

    witness = None
    for f in fl:
        answers = s_conditions(D, f)
        if len(set(answers)) != 1:
            witness = (lat.set_name(f.mask),) + answers
            break
    rep.add("sfilter.conditions-agree", witness is None, witness,
            on_fail=FINDING)

    witness = next(((lat.set_name(a), lat.set_name(b))
                    for a in s_masks for b in s_masks if a & b not in s_set), None)
    rep.add("sfilter.intersection-closed", witness is None, witness)
    witness = next(((lat.set_name(a), lat.set_name(b)) for a in s_masks
                    for b in s_masks if _s_generated_mask(D, a | b) not in s_set),
                   None)
    rep.add("sfilter.sjoin-closed", witness is None, witness)

    if lat.n <= SUBSET_SCAN_CAP:
        witness = None
        for seed in range(1, 1 << lat.n):
            s = _s_generated_mask(D, seed)
            if s not in s_set or seed & ~s:
                witness = (lat.set_name(seed),)
                break
            if any(is_subset(seed, t) and not is_subset(s, t) for t in s_masks):
                witness = (lat.set_name(seed),)
                break
        rep.add("sfilter.generated-least", witness is None, witness)
        witness = next(
            ((lat.set_name(seed), lat.names[x])
             for seed in range(1, 1 << lat.n) for x in range(lat.n)
             if not is_subset(_s_generated_mask(D, seed),
                              _s_generated_mask(D, seed | 1 << x))), None)
        rep.add("sfilter.generation-monotone", witness is None, witness)
    else:
        note = f"subset scan skipped above {SUBSET_SCAN_CAP} elements"
        rep.skip("sfilter.generated-least", note)
        rep.skip("sfilter.generation-monotone", note)

    rep.add("phi.injective", len(set(ext.values())) == len(gs))
    witness = next(((lat.set_name(g1), lat.set_name(g2))
                    for g1 in gs for g2 in gs
                    if is_subset(g1, g2) != is_subset(ext[g1], ext[g2])), None)
    rep.add("phi.order-embedding", witness is None, witness)
    rep.add("phi.image-is-sfilters", set(ext.values()) == s_set)
    rep.add("phi.bounds",
            ext[skel] == lat.full_mask and ext[top_only] == top_only)

    witness = None
    for g in gs:
        if ext[g] & skel != g:
            witness = (lat.set_name(g),)
            break
    if witness is None:
        for s in s_masks:
            if _extension_mask(D, s & skel) != s:
                witness = (lat.set_name(s),)
                break
    rep.add("phi.trace-roundtrip", witness is None, witness)

    witness = None
    for g in gs:
        image_star = star_mask(D, ext[g])
        if star_mask(D, g) != image_star \
                or _extension_mask(D, star_bar_mask(D, g)) != image_star:
            witness = (lat.set_name(g),)
            break
    rep.add("phi.star-equivariant", witness is None, witness)

    witness = next(((lat.set_name(g1), lat.set_name(g2))
                    for g1 in gs for g2 in gs
                    if ext[g1 & g2] != ext[g1] & ext[g2]), None)
    rep.add("phi.meet-preserved", witness is None, witness)
    witness = next(((lat.set_name(g1), lat.set_name(g2))
                    for g1 in gs for g2 in gs
                    if ext[_skeleton_filter_join(D, g1, g2)]
                    != _s_generated_mask(D, ext[g1] | ext[g2])), None)
    rep.add("phi.join-preserved", witness is None, witness)

    witness = None
    for g in gs:
        g_closed = star_bar_mask(D, star_bar_mask(D, g)) == g
        f_closed = star_mask(D, star_mask(D, ext[g])) == ext[g]
        if g_closed != f_closed:
            witness = (lat.set_name(g),)
            break
    rep.add("phi.closed-parts-correspond", witness is None, witness)
    return rep


# --- principal S-filters ------------------------------------------------------

law("sprincipal.carrier",
    "the principal S-filters are the up-sets of the skeleton elements")
law("sprincipal.bounds", "S[0) = L and S[1) = {1}")
law("sprincipal.join-form", "S[a) sjoin S[b) = S[a meet_interior b)")
law("sprincipal.meet-form", "S[a) meet S[b) = S[a join_interior b)")
law("sprincipal.meet-principal",
    "S[a) meet S[b) is the up-set of the join of the interiors")
law("sprincipal.complement-split",
    "S[a) sjoin S[a^d) = L and S[a) meet S[a^d) = {1}")
law("sprincipal.antitone", "a <= b implies S[b) subset of S[a)")
law("sprincipal.principal-iff-skeleton",
    "S[a) = [a) exactly when a is interior-fixed")
law("sprincipal.ortho-involution",
    "the orthocomplement is an involution on the principal S-filters")
law("sprincipal.ortho-antitone",
    "the orthocomplement reverses inclusion of principal S-filters")
law("sprincipal.ortho-bounds",
    "every principal S-filter meets its orthocomplement in {1} and sjoins to L")
law("sprincipal.skeleton-iso",
    "s -> S[s) maps the skeleton one-to-one onto the principal S-filters, "
    "turning meet_interior into sjoin and join into meet")


def s_principal_ortholattice(D: Dicomplementation) -> Report:
    """The ortholattice of principal S-filters and its skeleton mirror."""
    d = D._need("delta")
    lat = D.base
    rep = Report(subject="principal S-filters")
    top_only = 1 << lat.top
    skel_idx = D.interior_fixed()
    princ = [lat.up[d[d[a]]] for a in range(lat.n)]
    sfp = [lat.up[s] for s in skel_idx]

    rep.add("sprincipal.carrier",
            set(princ) == set(sfp) and len(set(sfp)) == len(skel_idx))
    rep.add("sprincipal.bounds",
            princ[lat.bottom] == lat.full_mask and princ[lat.top] == top_only)

    witness = next(((lat.names[a], lat.names[b])
                    for a in range(lat.n) for b in range(lat.n)
                    if _s_generated_mask(D, princ[a] | princ[b])
                    != lat.up[d[d[d[lat.join(d[a], d[b])]]]]), None)
    rep.add("sprincipal.join-form", witness is None, witness)
    # The stated meet form can fail off the skeleton: the interiors of a
    # and b may join below the interior of a | b.  A failure is recorded
    # as a finding and the corrected form is checked as a law of its own.
    witness = next(((lat.names[a], lat.names[b])
                    for a in range(lat.n) for b in range(lat.n)
                    if princ[a] & princ[b] != lat.up[d[d[lat.join(a, b)]]]), None)
    rep.add("sprincipal.meet-form", witness is None, witness, on_fail=FINDING)
    witness = next(((lat.names[a], lat.names[b])
                    for a in range(lat.n) for b in range(lat.n)
                    if princ[a] & princ[b] != lat.up[lat.join(d[d[a]], d[d[b]])]),
                   None)
    rep.add("sprincipal.meet-principal", witness is None, witness)
    witness = next(((lat.names[a],) for a in range(lat.n)
                    if _s_generated_mask(D, princ[a] | princ[d[a]]) != lat.full_mask
                    or princ[a] & princ[d[a]] != top_only), None)
    rep.add("sprincipal.complement-split", witness is None, witness)
    witness = next(((lat.names[a], lat.names[b])
                    for a in range(lat.n) for b in range(lat.n)
                    if lat.leq(a, b) and not is_subset(princ[b], princ[a])), None)
    rep.add("sprincipal.antitone", witness is None, witness)
    witness = next(((lat.names[a],) for a in range(lat.n)
                    if (princ[a] == lat.up[a]) != (d[d[a]] == a)), None)
    rep.add("sprincipal.principal-iff-skeleton", witness is None, witness)

    witness = next(((lat.names[s],) for s in skel_idx
                    if lat.up[d[d[s]]] != lat.up[s]), None)
    rep.add("sprincipal.ortho-involution", witness is None, witness)
    witness = next(((lat.names[s], lat.names[t])
                    for s in skel_idx for t in skel_idx
                    if is_subset(lat.up[s], lat.up[t])
                    and not is_subset(lat.up[d[t]], lat.up[d[s]])), None)
    rep.add("sprincipal.ortho-antitone", witness is None, witness)
    witness = next(((lat.names[s],) for s in skel_idx
                    if _s_generated_mask(D, lat.up[s] | lat.up[d[s]]) != lat.full_mask
                    or lat.up[s] & lat.up[d[s]] != top_only), None)
    rep.add("sprincipal.ortho-bounds", witness is None, witness)

    witness = None
    if len(set(sfp)) != len(skel_idx):
        witness = ("duplicate image",)
    else:
        for s in skel_idx:
            for t in skel_idx:
                if _s_generated_mask(D, lat.up[s] | lat.up[t]) \
                        != lat.up[d[lat.join(d[s], d[t])]] \
                        or lat.up[s] & lat.up[t] != lat.up[lat.join(s, t)]:
                    witness = (lat.names[s], lat.names[t])
                    break
            if witness:
                break
    rep.add("sprincipal.skeleton-iso", witness is None, witness)
    return rep
