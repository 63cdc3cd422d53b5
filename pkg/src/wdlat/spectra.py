"""Prime, primary and maximal filters, on the base lattice and its skeleton.

"Maximal" always means maximal among the proper filters of an explicitly
named universe: the base lattice, the interior skeleton, or the S-filter
family.  Mixing those up silently is the main hazard of this corner of
the theory, so the universe is an argument everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dicomplement import Dicomplementation
from .errors import NotProper, NotSFilter, UniverseMismatch
from .filters import FILTER_CAP, Filter, enumerate_filters, is_filter_mask
from .lattice import bits, is_subset
from .reports import Report, law
from .sfilters import (SFilter, _extension_mask, _is_skeleton_filter_mask,
                       _mi_witness, _skeleton_mask, is_s_filter,
                       skeleton_filter_masks)

UNIVERSES = ("L", "skeleton")


@dataclass(frozen=True)
class FilterClassification:
    """Spectral flags of one filter inside one universe."""

    filter: Filter
    is_prime: bool
    is_primary: bool
    is_maximal: bool
    is_proper: bool

    def as_dict(self) -> dict:
        return {"filter": list(self.filter.members),
                "prime": self.is_prime, "primary": self.is_primary,
                "maximal": self.is_maximal, "proper": self.is_proper}


def _primary_witness(D: Dicomplementation, mask: int,
                     universe: int) -> int | None:
    """First x in the universe with neither x nor x^d in the set."""
    d = D._need("delta")
    for x in bits(universe):
        if not mask >> x & 1 and not mask >> d[x] & 1:
            return x
    return None


def _prime_witness(D: Dicomplementation, mask: int,
                   universe: int) -> tuple[int, int] | None:
    """First pair with x | y in the set but neither member in it."""
    lat = D.base
    for x in bits(universe & ~mask):
        for y in bits(universe & ~mask):
            if mask >> lat.join(x, y) & 1:
                return (x, y)
    return None


def _maximal_in(mask: int, proper_family: list[int]) -> bool:
    return mask in proper_family and not any(
        g != mask and is_subset(mask, g) for g in proper_family)


def _proper_filters(D: Dicomplementation, max_size: int) -> list[int]:
    lat = D.base
    return [f.mask for f in enumerate_filters(D, max_size)
            if f.mask != lat.full_mask]


def _proper_skeleton_filters(D: Dicomplementation) -> list[int]:
    skel = _skeleton_mask(D)
    return [g for g in skeleton_filter_masks(D) if g != skel]


def classify(D: Dicomplementation, F: Filter, universe: str = "L",
             max_size: int = FILTER_CAP) -> FilterClassification:
    """Prime / primary / maximal flags for F inside the chosen universe."""
    lat = D.base
    if universe not in UNIVERSES:
        raise ValueError(f"universe must be one of {UNIVERSES}")
    if F.base != lat:
        raise UniverseMismatch("the filter lives over a different lattice")
    if universe == "L":
        if not is_filter_mask(lat, F.mask):
            raise UniverseMismatch(
                f"{lat.set_name(F.mask)} is not a filter of the base lattice")
        carrier = lat.full_mask
        proper_family = _proper_filters(D, max_size)
    else:
        if not _is_skeleton_filter_mask(D, F.mask):
            raise UniverseMismatch(
                f"{lat.set_name(F.mask)} is not a filter of the interior skeleton")
        carrier = _skeleton_mask(D)
        proper_family = _proper_skeleton_filters(D)
    return FilterClassification(
        filter=F,
        is_prime=_prime_witness(D, F.mask, carrier) is None,
        is_primary=_primary_witness(D, F.mask, carrier) is None,
        is_maximal=_maximal_in(F.mask, proper_family),
        is_proper=F.mask != carrier)


def primary_witness(D: Dicomplementation, F: Filter,
                    universe: str = "L") -> str | None:
    """An element x with x and x^d both outside F, or None."""
    carrier = D.base.full_mask if universe == "L" else _skeleton_mask(D)
    w = _primary_witness(D, F.mask, carrier)
    return None if w is None else D.base.names[w]


def prime_witness(D: Dicomplementation, F: Filter,
                  universe: str = "L") -> tuple[str, str] | None:
    """A pair whose join is in F while both members escape it, or None."""
    carrier = D.base.full_mask if universe == "L" else _skeleton_mask(D)
    w = _prime_witness(D, F.mask, carrier)
    return None if w is None else (D.base.names[w[0]], D.base.names[w[1]])


# --- the greedy primary extension ---------------------------------------------


def _skeleton_generated(D: Dicomplementation, seed: int) -> int:
    """Least skeleton filter containing a subset of the skeleton."""
    lat = D.base
    d = D._need("delta")
    skel = _skeleton_mask(D)
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
    out = 0
    for i in bits(closed):
        out |= lat.up[i] & skel
    return out


def extend_to_primary(D: Dicomplementation, F: Filter) -> SFilter:
    """A primary S-filter containing the proper S-filter F.

    Deterministic replacement for the maximality argument: the trace is
    grown by the smallest-index skeleton element that keeps the
    generated skeleton filter proper, until none is left, and the
    resulting maximal skeleton filter is extended back.
    """
    lat = D.base
    if not is_s_filter(D, F):
        raise NotSFilter(f"{lat.set_name(F.mask)} is not an S-filter")
    bottom_bit = 1 << lat.bottom
    if F.mask & bottom_bit:
        raise NotProper("only a proper filter extends to a primary one")
    skel = _skeleton_mask(D)
    g = F.mask & skel
    while True:
        for s in bits(skel & ~g):
            cand = _skeleton_generated(D, g | 1 << s)
            if not cand & bottom_bit:
                g = cand
                break
        else:
            break
    return SFilter(lat, _extension_mask(D, g))


# --- theorem suite -------------------------------------------------------------

law("spectral.prime-implies-primary",
    "every proper prime filter of the base lattice is primary")
law("spectral.maximal-implies-primary",
    "every maximal filter of the base lattice is primary")
law("spectral.skeleton-primary-iff-prime",
    "primary and prime agree on proper skeleton filters")
law("spectral.skeleton-primary-maximal",
    "every proper primary skeleton filter is maximal")
law("spectral.prime-sfilter-maximal",
    "every proper prime S-filter is maximal among S-filters")
law("spectral.maximal-correspondence",
    "a skeleton filter is maximal exactly when its extension is a maximal S-filter")
law("spectral.primary-trace-correspondence",
    "a proper S-filter is primary exactly when its trace is primary")
law("spectral.primary-equals-prime-trace",
    "the proper primary S-filters are the proper S-filters with prime trace")
law("spectral.principal-maximal-iff-atom",
    "[a) is maximal exactly when a is an atom")
law("spectral.s-principal-maximal-iff-atom",
    "S[s) is maximal among S-filters exactly when s is a skeleton atom")
law("spectral.proper-extends-to-primary",
    "every proper S-filter is contained in a primary S-filter")
law("spectral.extension-is-primary",
    "the greedy extension is a primary S-filter containing its input")


def verify_spectral_theorems(D: Dicomplementation,
                             max_size: int = FILTER_CAP) -> Report:
    """All classification theorems, brute forced over the filter families."""
    d = D._need("delta")
    lat = D.base
    rep = Report(subject="spectra")
    full = lat.full_mask
    skel = _skeleton_mask(D)
    filters = [f.mask for f in enumerate_filters(D, max_size)]
    proper = [m for m in filters if m != full]
    s_proper = [m for m in filters
                if m != full and _mi_witness(D, m) is None]
    g_proper = _proper_skeleton_filters(D)

    def prime(mask, carrier=full):
        return _prime_witness(D, mask, carrier) is None

    def primary(mask, carrier=full):
        return _primary_witness(D, mask, carrier) is None

    witness = next(((lat.set_name(m),) for m in proper
                    if prime(m) and not primary(m)), None)
    rep.add("spectral.prime-implies-primary", witness is None, witness)

    maximal = [m for m in proper if _maximal_in(m, proper)]
    witness = next(((lat.set_name(m),) for m in maximal if not primary(m)), None)
    rep.add("spectral.maximal-implies-primary", witness is None, witness)

    witness = next(((lat.set_name(g),) for g in g_proper
                    if primary(g, skel) != prime(g, skel)), None)
    rep.add("spectral.skeleton-primary-iff-prime", witness is None, witness)
    witness = next(((lat.set_name(g),) for g in g_proper
                    if primary(g, skel) and not _maximal_in(g, g_proper)), None)
    rep.add("spectral.skeleton-primary-maximal", witness is None, witness)

    witness = next(((lat.set_name(m),) for m in s_proper
                    if prime(m) and not _maximal_in(m, s_proper)), None)
    rep.add("spectral.prime-sfilter-maximal", witness is None, witness)

    witness = next(((lat.set_name(g),) for g in g_proper
                    if _maximal_in(g, g_proper)
                    != _maximal_in(_extension_mask(D, g), s_proper)), None)
    rep.add("spectral.maximal-correspondence", witness is None, witness)

    witness = next(((lat.set_name(m),) for m in s_proper
                    if primary(m) != primary(m & skel, skel)), None)
    rep.add("spectral.primary-trace-correspondence", witness is None, witness)
    witness = next(((lat.set_name(m),) for m in s_proper
                    if primary(m) != prime(m & skel, skel)), None)
    rep.add("spectral.primary-equals-prime-trace", witness is None, witness)

    witness = next(((lat.names[a],) for a in range(lat.n)
                    if _maximal_in(lat.up[a], proper) != (a in lat.atoms)), None)
    rep.add("spectral.principal-maximal-iff-atom", witness is None, witness)

    skel_atoms = [s for s in bits(skel) if s != lat.bottom
                  and not any(t != s and t != lat.bottom and lat.leq(t, s)
                              for t in bits(skel))]
    witness = next(((lat.names[s],) for s in bits(skel)
                    if _maximal_in(lat.up[d[d[s]]], s_proper)
                    != (s in skel_atoms)), None)
    rep.add("spectral.s-principal-maximal-iff-atom", witness is None, witness)

    witness = next(((lat.set_name(m),) for m in s_proper
                    if not any(is_subset(m, p) and primary(p) for p in s_proper)),
                   None)
    rep.add("spectral.proper-extends-to-primary", witness is None, witness)

    witness = None
    for m in s_proper:
        ext = extend_to_primary(D, Filter(lat, m))
        if not is_subset(m, ext.mask) or not primary(ext.mask):
            witness = (lat.set_name(m),)
            break
    rep.add("spectral.extension-is-primary", witness is None, witness)
    return rep
