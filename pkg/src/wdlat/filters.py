"""Filters of a weakly complemented lattice and the filter lattice.

Filters are bitmasks over the base carrier.  The module enumerates all
filters, materialises the inclusion lattice as a bounded lattice in its
own right, attaches the annihilator operator as a dual weak
complementation on it, and checks the pseudocomplement and principal
filter structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import dicomplement as dcm
from .dicomplement import Dicomplementation
from .errors import (BaseMismatch, EmptyGenerator, MissingUnary,
                     NotInSkeleton, SizeCapExceeded)
from .lattice import BoundedLattice, bits, is_subset
from .reports import Report, law

FILTER_CAP = 24
SUBSET_SCAN_CAP = 12


def _base_of(obj) -> BoundedLattice:
    return obj.base if isinstance(obj, Dicomplementation) else obj


@dataclass(frozen=True)
class Filter:
    """A nonempty, upward closed, meet closed subset, as a bitmask."""

    base: BoundedLattice
    mask: int

    @property
    def members(self) -> tuple[str, ...]:
        return self.base.names_of(self.mask)

    @property
    def size(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, name: str) -> bool:
        return bool(self.mask >> self.base.index(name) & 1)

    def is_proper(self) -> bool:
        return self.mask != self.base.full_mask

    def least(self) -> str:
        """The generator; every filter of a finite lattice is principal."""
        k = None
        for i in bits(self.mask):
            k = i if k is None else self.base.meet(k, i)
        return self.base.names[k]

    def subset_of(self, other: "Filter") -> bool:
        return is_subset(self.mask, other.mask)

    def __repr__(self) -> str:
        return f"Filter({self.base.set_name(self.mask)})"


def is_filter_mask(lat: BoundedLattice, mask: int) -> bool:
    if mask == 0 or not mask >> lat.top & 1:
        return False
    for i in bits(mask):
        if not is_subset(lat.up[i], mask):
            return False
    for i in bits(mask):
        for j in bits(mask):
            if j > i:
                break
            if not mask >> lat.meet(i, j) & 1:
                return False
    return True


def as_filter(lat: BoundedLattice, names: Iterable[str]) -> Filter:
    """Wrap an explicit member list, validating the filter invariants."""
    mask = lat.mask_of_names(names)
    if not is_filter_mask(lat, mask):
        raise ValueError(f"{lat.set_name(mask)} is not a filter")
    return Filter(lat, mask)


def filter_generated(D, X: Iterable[str]) -> Filter:
    """Least filter containing X: close under meets, then upward."""
    lat = _base_of(D)
    seed = lat.mask_of_names(X)
    if seed == 0:
        raise EmptyGenerator("a generated filter needs a nonempty generator")
    closed = seed
    while True:
        grown = closed
        members = list(bits(closed))
        for i in members:
            for j in members:
                grown |= 1 << lat.meet(i, j)
        if grown == closed:
            break
        closed = grown
    return Filter(lat, lat.upward_closure(closed))


def filter_join(D, F: Filter, G: Filter) -> Filter:
    """{x | some f & g <= x with f in F, g in G}."""
    lat = _base_of(D)
    if F.base != lat or G.base != lat:
        raise BaseMismatch("filters live over a different lattice")
    mask = 0
    for f in bits(F.mask):
        for g in bits(G.mask):
            mask |= lat.up[lat.meet(f, g)]
    return Filter(lat, mask)


def principal_filter(lat: BoundedLattice, a: str) -> Filter:
    return Filter(lat, lat.up[lat.index(a)])


# --- the annihilator operators ----------------------------------------------


def star_mask(D: Dicomplementation, mask: int) -> int:
    """{a | x^d <= a for every x in the set}, as a mask."""
    d = D._need("delta")
    lat = D.base
    out = lat.full_mask
    for x in bits(mask):
        out &= lat.up[d[x]]
    return out


def plus_mask(D, mask: int) -> int:
    """{x | x | a = 1 for every a in the set}, as a mask."""
    lat = _base_of(D)
    out = 0
    for x in range(lat.n):
        if all(lat.join(x, a) == lat.top for a in bits(mask)):
            out |= 1 << x
    return out


def star(D: Dicomplementation, X: Iterable[str]) -> Filter:
    """The annihilator of an arbitrary set; always a filter."""
    return Filter(D.base, star_mask(D, D.base.mask_of_names(X)))


def plus(D, X: Iterable[str]) -> tuple[str, ...]:
    """The join-complement set of X; a filter when the base is distributive."""
    lat = _base_of(D)
    return lat.names_of(plus_mask(D, lat.mask_of_names(X)))


def star_bar_mask(D: Dicomplementation, mask: int) -> int:
    d = D._need("delta")
    lat = D.base
    skeleton = sum(1 << i for i in D.interior_fixed())
    if mask & ~skeleton:
        raise NotInSkeleton(
            f"{lat.set_name(mask & ~skeleton)} lies outside the interior skeleton")
    out = skeleton
    for a in bits(mask):
        out &= lat.up[d[a]]
    return out


def star_bar(D: Dicomplementation, G: Iterable[str]) -> tuple[str, ...]:
    """The annihilator computed inside the interior skeleton."""
    return D.base.names_of(star_bar_mask(D, D.base.mask_of_names(G)))


def condition_star_holds(D: Dicomplementation) -> bool:
    """x | y = 1 implies x^d <= y, scanned over all pairs."""
    return condition_star_witness(D) is None


def condition_star_witness(D: Dicomplementation) -> tuple[str, str] | None:
    d = D._need("delta")
    lat = D.base
    for x in range(lat.n):
        for y in range(lat.n):
            if lat.join(x, y) == lat.top and not lat.leq(d[x], y):
                return (lat.names[x], lat.names[y])
    return None


# --- the filter lattice -----------------------------------------------------


class FilterLattice:
    """All filters of the base, ordered by inclusion.

    filters is deterministic: by size, then by mask as an integer.  The
    inclusion order is materialised as a BoundedLattice whose element
    names are the printed filter sets, so every lattice-level check in
    the package can run on it unchanged.
    """

    def __init__(self, D, filters: tuple[Filter, ...]):
        self.dicomp = D if isinstance(D, Dicomplementation) else None
        self.base = _base_of(D)
        self.filters = filters
        self._pos = {f.mask: k for k, f in enumerate(filters)}
        names = tuple(self.base.set_name(f.mask) for f in filters)
        up = tuple(sum(1 << j for j, g in enumerate(filters)
                       if is_subset(f.mask, g.mask))
                   for f in filters)
        self.lattice = BoundedLattice(names, up)
        if self.dicomp is not None and self.dicomp.has_delta:
            self.star_index = tuple(
                self.index_of(star_mask(self.dicomp, f.mask)) for f in filters)
            self.plus_masks = tuple(plus_mask(self.base, f.mask) for f in filters)
        else:
            self.star_index = None
            self.plus_masks = None

    def __len__(self) -> int:
        return len(self.filters)

    def __iter__(self):
        return iter(self.filters)

    def index_of(self, filter_or_mask) -> int:
        mask = filter_or_mask.mask if isinstance(filter_or_mask, Filter) else filter_or_mask
        try:
            return self._pos[mask]
        except KeyError:
            raise ValueError(
                f"{self.base.set_name(mask)} is not a filter of this lattice") from None

    def star_of(self, F: Filter) -> Filter:
        if self.star_index is None:
            raise MissingUnary("filter lattice built without a weak complementation")
        return self.filters[self.star_index[self.index_of(F)]]

    def plus_of(self, F: Filter) -> tuple[str, ...]:
        if self.plus_masks is None:
            raise MissingUnary("filter lattice built without a weak complementation")
        return self.base.names_of(self.plus_masks[self.index_of(F)])

    def member_lists(self) -> list[list[str]]:
        return [list(f.members) for f in self.filters]


def enumerate_filters(D, max_size: int = FILTER_CAP) -> FilterLattice:
    """Subset scan for every filter; deterministic order."""
    lat = _base_of(D)
    if lat.n > max_size:
        raise SizeCapExceeded(
            f"filter enumeration capped at {max_size} elements, lattice has {lat.n}")
    must = 1 << lat.top
    found = [mask for mask in range(1 << lat.n)
             if mask & must and is_filter_mask(lat, mask)]
    found.sort(key=lambda m: (bin(m).count("1"), m))
    return FilterLattice(D, tuple(Filter(lat, m) for m in found))


# --- laws -------------------------------------------------------------------

law("star.antitone", "X subset of Y implies Y* subset of X*")
law("star.extensive", "X is contained in X**")
law("star.triple", "X*** = X*")
law("star.generated-agrees", "[X)* = X* for every nonempty subset X")
law("star.filter-valued", "X* is a filter for every subset X")
law("star.bounds", "L* = {1} and {1}* = L")
law("star.meet-interior-closed", "F* is closed under meet_interior")
law("star.closure-operator", "X -> X** is a closure operator on filters")
law("star.disjoint", "F meet F* = {1}")
law("filterlat.absorb-star", "F subset of G implies G meet (G join F*) = G")
law("plus.disjoint", "F meet F+ = {1}")
law("plus.greatest-disjoint", "G meet F = {1} implies G subset of F+")
law("plus.contains-star", "F* is contained in F+")
law("plus.filter-valued", "F+ is a filter when the base is distributive")
law("filterlat.distributive", "the filter lattice inherits distributivity")
law("star.equals-plus", "F* = F+ under the join-top condition")
law("star.pseudocomplement",
    "F* is the greatest filter disjoint from F under the join-top condition")
law("eta.dual-iso",
    "a -> [a) is a bijection turning joins into meets, meets into joins, "
    "weak complement into star")
law("annihilator.principal-form", "[a)* = [a^d)")
law("annihilator.bounds", "[1)* = L and [0)* = {1}")
law("annihilator.intersection-form", "F* is the meet of [x^d) over x in F")
law("annihilator.monotone", "a <= b implies [a)* subset of [b)*")
law("filterlat.all-principal", "every filter of a finite lattice is principal")
law("principal.closed-under-ops",
    "principal filters are closed under meet, join and star")
law("lambda.carrier",
    "the annihilator image equals the principal filters of skeleton elements")
law("lambda.ortholattice",
    "the annihilator image is an ortholattice under meet, star-star join and star")
law("lambda.skeleton-correspondence",
    "s -> [s) matches skeleton operations with annihilator-image operations")


def _subset_scan_feasible(lat: BoundedLattice) -> bool:
    return lat.n <= SUBSET_SCAN_CAP


def filter_lattice_dual_wcl(D: Dicomplementation,
                            max_size: int = FILTER_CAP) -> tuple[Dicomplementation, Report]:
    """Attach the annihilator to the filter lattice and check the laws.

    Returns the dual weakly complemented structure on F(L) together
    with the report: annihilator lemma, axioms on F(L), closed skeleton
    ortholattice and dense-part nearlattice rows.
    """
    d = D._need("delta")
    lat = D.base
    fl = enumerate_filters(D, max_size)
    rep = Report(subject="F(L)")

    pairs = [(f.mask, g.mask) for f in fl for g in fl]
    witness = next((( lat.set_name(a), lat.set_name(b)) for a, b in pairs
                    if is_subset(a, b)
                    and not is_subset(star_mask(D, b), star_mask(D, a))), None)
    rep.add("star.antitone", witness is None, witness)
    witness = next(((lat.set_name(f.mask),) for f in fl
                    if not is_subset(f.mask, star_mask(D, star_mask(D, f.mask)))), None)
    rep.add("star.extensive", witness is None, witness)
    witness = None
    for f in fl:
        s1 = star_mask(D, f.mask)
        if star_mask(D, star_mask(D, s1)) != s1:
            witness = (lat.set_name(f.mask),)
            break
    rep.add("star.triple", witness is None, witness)

    if _subset_scan_feasible(lat):
        witness = None
        for mask in range(1, 1 << lat.n):
            if star_mask(D, filter_generated(lat, lat.names_of(mask)).mask) \
                    != star_mask(D, mask):
                witness = (lat.set_name(mask),)
                break
        rep.add("star.generated-agrees", witness is None, witness)
        witness = next(((lat.set_name(mask),) for mask in range(1 << lat.n)
                        if not is_filter_mask(lat, star_mask(D, mask))), None)
        rep.add("star.filter-valued", witness is None, witness)
    else:
        note = f"subset scan skipped above {SUBSET_SCAN_CAP} elements"
        rep.skip("star.generated-agrees", note)
        witness = next(((lat.set_name(f.mask),) for f in fl
                        if not is_filter_mask(lat, star_mask(D, f.mask))), None)
        rep.add("star.filter-valued", witness is None, witness,
                note="checked on filters only")

    top_only = 1 << lat.top
    rep.add("star.bounds",
            star_mask(D, lat.full_mask) == top_only
            and star_mask(D, top_only) == lat.full_mask)

    witness = None
    for f in fl:
        s = star_mask(D, f.mask)
        for i in bits(s):
            for j in bits(s):
                if not s >> d[lat.join(d[i], d[j])] & 1:
                    witness = (lat.set_name(f.mask), lat.names[i], lat.names[j])
                    break
            if witness:
                break
        if witness:
            break
    rep.add("star.meet-interior-closed", witness is None, witness)

    # closure operator on F(L): extensive + monotone + idempotent
    witness = None
    close = {f.mask: star_mask(D, star_mask(D, f.mask)) for f in fl}
    for f in fl:
        if not is_subset(f.mask, close[f.mask]) \
                or close[close[f.mask]] != close[f.mask]:
            witness = (lat.set_name(f.mask),)
            break
    if witness is None:
        witness = next(((lat.set_name(a), lat.set_name(b)) for a, b in pairs
                        if is_subset(a, b) and not is_subset(close[a], close[b])), None)
    rep.add("star.closure-operator", witness is None, witness)

    # the annihilator as a dual weak complementation on the filter lattice
    star_names = {fl.lattice.names[k]: fl.lattice.names[fl.star_index[k]]
                  for k in range(len(fl))}
    D_FL = dcm.attach(fl.lattice, nabla=star_names)
    rep.extend(dcm.axiom_report(D_FL))
    rep.extend(dcm.skeleton_report(D_FL, "closed"))
    rep.extend(dcm.nearlattice_check(D_FL))
    return D_FL, rep


def pseudocomplement_checks(D: Dicomplementation,
                            max_size: int = FILTER_CAP) -> Report:
    """Disjointness, pseudocomplements and the plus operator on F(L)."""
    lat = D.base
    fl = enumerate_filters(D, max_size)
    rep = Report(subject="pseudocomplement")
    top_only = 1 << lat.top

    witness = next(((lat.set_name(f.mask),) for f in fl
                    if f.mask & star_mask(D, f.mask) != top_only), None)
    rep.add("star.disjoint", witness is None, witness)
    witness = next(((lat.set_name(f.mask),) for f in fl
                    if f.mask & plus_mask(lat, f.mask) != top_only), None)
    rep.add("plus.disjoint", witness is None, witness)
    witness = next(((lat.set_name(g.mask), lat.set_name(f.mask))
                    for g in fl for f in fl
                    if g.mask & f.mask == top_only
                    and not is_subset(g.mask, plus_mask(lat, f.mask))), None)
    rep.add("plus.greatest-disjoint", witness is None, witness)
    witness = next(((lat.set_name(f.mask),) for f in fl
                    if not is_subset(star_mask(D, f.mask),
                                     plus_mask(lat, f.mask))), None)
    rep.add("plus.contains-star", witness is None, witness)
    witness = next(((lat.set_name(f.mask), lat.set_name(g.mask))
                    for f in fl for g in fl
                    if is_subset(f.mask, g.mask)
                    and g.mask & (filter_join(lat, g, fl.filters[fl.star_index[fl.index_of(f)]]).mask)
                    != g.mask), None)
    rep.add("filterlat.absorb-star", witness is None, witness)

    if lat.is_distributive():
        witness = next(((lat.set_name(f.mask),) for f in fl
                        if not is_filter_mask(lat, plus_mask(lat, f.mask))), None)
        rep.add("plus.filter-valued", witness is None, witness)
        witness = fl.lattice.distributivity_witness()
        rep.add("filterlat.distributive", witness is None, witness)
    else:
        note = "base lattice is not distributive"
        rep.skip("plus.filter-valued", note)
        rep.skip("filterlat.distributive", note)

    cond = condition_star_witness(D)
    if cond is None:
        witness = next(((lat.set_name(f.mask),) for f in fl
                        if star_mask(D, f.mask) != plus_mask(lat, f.mask)), None)
        rep.add("star.equals-plus", witness is None, witness)
        witness = next(((lat.set_name(g.mask), lat.set_name(f.mask))
                        for g in fl for f in fl
                        if g.mask & f.mask == top_only
                        and not is_subset(g.mask, star_mask(D, f.mask))), None)
        rep.add("star.pseudocomplement", witness is None, witness)
    else:
        note = f"join-top condition fails at ({cond[0]}, {cond[1]})"
        rep.skip("star.equals-plus", note)
        rep.skip("star.pseudocomplement", note)
    return rep


def principal_dual_iso(D: Dicomplementation,
                       max_size: int = FILTER_CAP) -> Report:
    """The principal-filter picture: eta, annihilators and their image."""
    d = D._need("delta")
    lat = D.base
    fl = enumerate_filters(D, max_size)
    rep = Report(subject="principal filters")

    eta = tuple(lat.up[a] for a in range(lat.n))
    witness = None
    if len(set(eta)) != lat.n:
        witness = ("duplicate image",)
    else:
        for a in range(lat.n):
            for b in range(lat.n):
                if eta[lat.join(a, b)] != eta[a] & eta[b] \
                        or eta[lat.meet(a, b)] != filter_join(
                            lat, Filter(lat, eta[a]), Filter(lat, eta[b])).mask \
                        or eta[d[a]] != star_mask(D, eta[a]):
                    witness = (lat.names[a], lat.names[b])
                    break
            if witness:
                break
    rep.add("eta.dual-iso", witness is None, witness)

    witness = next(((lat.names[a],) for a in range(lat.n)
                    if star_mask(D, eta[a]) != lat.up[d[a]]), None)
    rep.add("annihilator.principal-form", witness is None, witness)
    rep.add("annihilator.bounds",
            star_mask(D, eta[lat.top]) == lat.full_mask
            and star_mask(D, eta[lat.bottom]) == 1 << lat.top)
    witness = None
    for f in fl:
        expect = lat.full_mask
        for x in bits(f.mask):
            expect &= lat.up[d[x]]
        if star_mask(D, f.mask) != expect:
            witness = (lat.set_name(f.mask),)
            break
    rep.add("annihilator.intersection-form", witness is None, witness)
    witness = next(((lat.names[a], lat.names[b])
                    for a in range(lat.n) for b in range(lat.n)
                    if lat.leq(a, b)
                    and not is_subset(star_mask(D, eta[a]), star_mask(D, eta[b]))), None)
    rep.add("annihilator.monotone", witness is None, witness)

    principal = set(eta)
    witness = next(((lat.set_name(f.mask),) for f in fl
                    if f.mask not in principal), None)
    rep.add("filterlat.all-principal", witness is None, witness)
    witness = next(((lat.names[a], lat.names[b])
                    for a in range(lat.n) for b in range(lat.n)
                    if eta[a] & eta[b] not in principal
                    or filter_join(lat, Filter(lat, eta[a]),
                                   Filter(lat, eta[b])).mask not in principal
                    or star_mask(D, eta[a]) not in principal), None)
    rep.add("principal.closed-under-ops", witness is None, witness)

    # the annihilator image against the interior skeleton
    skeleton = D.interior_fixed()
    lam = {star_mask(D, eta[a]) for a in range(lat.n)}
    witness = None
    if lam != {eta[s] for s in skeleton}:
        witness = ("image mismatch",)
    rep.add("lambda.carrier", witness is None, witness)

    def lam_join(x: int, y: int) -> int:
        return star_mask(D, star_mask(D, filter_join(
            lat, Filter(lat, x), Filter(lat, y)).mask))

    witness = None
    for x in lam:
        if star_mask(D, x) not in lam or star_mask(D, star_mask(D, x)) != x:
            witness = (lat.set_name(x),)
            break
        for y in lam:
            if x & y not in lam or lam_join(x, y) not in lam:
                witness = (lat.set_name(x), lat.set_name(y))
                break
            if is_subset(x, y) and not is_subset(star_mask(D, y), star_mask(D, x)):
                witness = (lat.set_name(x), lat.set_name(y))
                break
        if witness:
            break
    if witness is None:
        witness = next(((lat.set_name(x),) for x in lam
                        if x & star_mask(D, x) != 1 << lat.top
                        or lam_join(x, star_mask(D, x)) != lat.full_mask), None)
    rep.add("lambda.ortholattice", witness is None, witness)

    witness = None
    for s in skeleton:
        for t in skeleton:
            if eta[d[lat.join(d[s], d[t])]] != lam_join(eta[s], eta[t]) \
                    or eta[lat.join(s, t)] != eta[s] & eta[t] \
                    or eta[d[s]] != star_mask(D, eta[s]):
                witness = (lat.names[s], lat.names[t])
                break
        if witness:
            break
    rep.add("lambda.skeleton-correspondence", witness is None, witness)
    return rep
