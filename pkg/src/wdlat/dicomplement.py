"""Weak complementations on finite bounded lattices.

attach() validates the axioms of a weak complementation (field name
delta) and of a dual weak complementation (nabla) exhaustively on the
carrier.  From a validated instance the module derives interior and
closure maps, the two skeleton ortholattices, dense and codense parts,
identity reports, and an exhaustive enumeration of all admissible
tables on small lattices.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping, Sequence

from .errors import (AxiomViolation, MissingUnary, NotBoolean, NotBounded,
                     NotALattice, OrtholawViolation, SizeCapExceeded)
from .lattice import BoundedLattice
from .reports import Report, law

ENUMERATION_CAP = 6

LAW_DELTA_DOUBLE = law("delta.double-drop", "x^dd <= x")
LAW_DELTA_ANTITONE = law("delta.antitone", "x <= y implies y^d <= x^d")
LAW_DELTA_SPLIT = law("delta.meet-split", "(x & y) | (x & y^d) = x")
LAW_NABLA_DOUBLE = law("nabla.double-raise", "x^nn >= x")
LAW_NABLA_ANTITONE = law("nabla.antitone", "x <= y implies y^n <= x^n")
LAW_NABLA_SPLIT = law("nabla.join-split", "(x | y) & (x | y^n) = x")
LAW_NABLA_BELOW_DELTA = law("nabla.below-delta", "x^n <= x^d")

_TABLE_WORDS = {"delta": "a weak complementation table",
                "nabla": "a dual weak complementation table"}


class Dicomplementation:
    """Validated unary tables attached to a bounded lattice.

    At least one of the two tables is present.  Tables are stored at
    index level; all public methods speak element names.  Instances are
    immutable after construction; build them through attach(),
    trivial_dicomplementation() or boolean_dicomplementation().
    """

    def __init__(self, base: BoundedLattice,
                 delta_i: tuple[int, ...] | None,
                 nabla_i: tuple[int, ...] | None):
        self.base = base
        self._delta = delta_i
        self._nabla = nabla_i

    # --- tables ----------------------------------------------------------

    @property
    def has_delta(self) -> bool:
        return self._delta is not None

    @property
    def has_nabla(self) -> bool:
        return self._nabla is not None

    @property
    def delta(self) -> dict[str, str] | None:
        if self._delta is None:
            return None
        names = self.base.names
        return {names[i]: names[v] for i, v in enumerate(self._delta)}

    @property
    def nabla(self) -> dict[str, str] | None:
        if self._nabla is None:
            return None
        names = self.base.names
        return {names[i]: names[v] for i, v in enumerate(self._nabla)}

    def _need(self, side: str) -> tuple[int, ...]:
        table = self._delta if side == "delta" else self._nabla
        if table is None:
            raise MissingUnary(f"operation needs {_TABLE_WORDS[side]}")
        return table

    # --- unary operations -------------------------------------------------

    def weak_complement(self, x: str) -> str:
        d = self._need("delta")
        return self.base.names[d[self.base.index(x)]]

    def dual_weak_complement(self, x: str) -> str:
        n = self._need("nabla")
        return self.base.names[n[self.base.index(x)]]

    def interior(self, x: str) -> str:
        """The coextensive idempotent map x^dd."""
        d = self._need("delta")
        return self.base.names[d[d[self.base.index(x)]]]

    def closure(self, x: str) -> str:
        """The extensive idempotent map x^nn."""
        n = self._need("nabla")
        return self.base.names[n[n[self.base.index(x)]]]

    # --- derived binary operations ----------------------------------------

    def meet_interior(self, x: str, y: str) -> str:
        """(x^d | y^d)^d, the meet of the interior skeleton."""
        d = self._need("delta")
        lat = self.base
        i, j = lat.index(x), lat.index(y)
        return lat.names[d[lat.join(d[i], d[j])]]

    def join_closure(self, x: str, y: str) -> str:
        """(x^n & y^n)^n, the join of the closed skeleton."""
        n = self._need("nabla")
        lat = self.base
        i, j = lat.index(x), lat.index(y)
        return lat.names[n[lat.meet(n[i], n[j])]]

    def join_interior(self, x: str, y: str) -> str:
        """(x | y)^dd."""
        d = self._need("delta")
        lat = self.base
        k = lat.join(lat.index(x), lat.index(y))
        return lat.names[d[d[k]]]

    # --- carriers ----------------------------------------------------------

    def interior_fixed(self) -> tuple[int, ...]:
        d = self._need("delta")
        return tuple(i for i in range(self.base.n) if d[d[i]] == i)

    def closure_fixed(self) -> tuple[int, ...]:
        n = self._need("nabla")
        return tuple(i for i in range(self.base.n) if n[n[i]] == i)

    def dense_part(self) -> tuple[str, ...]:
        """Elements whose dual weak complement is bottom."""
        n = self._need("nabla")
        lat = self.base
        return tuple(lat.names[i] for i in range(lat.n) if n[i] == lat.bottom)

    def codense_part(self) -> tuple[str, ...]:
        """Elements whose weak complement is top."""
        d = self._need("delta")
        lat = self.base
        return tuple(lat.names[i] for i in range(lat.n) if d[i] == lat.top)

    def dual(self) -> "Dicomplementation":
        """The same tables read over the order-dual lattice."""
        return Dicomplementation(self.base.dual(), self._nabla, self._delta)

    def __repr__(self) -> str:
        sides = [s for s in ("delta", "nabla") if getattr(self, f"has_{s}")]
        return f"Dicomplementation(n={self.base.n}, tables={'+'.join(sides)})"


# --- validation -------------------------------------------------------------


def _as_index_table(lat: BoundedLattice,
                    table: Mapping[str, str] | Sequence[str]) -> tuple[int, ...]:
    if isinstance(table, Mapping):
        if set(table) != set(lat.names):
            missing = sorted(set(lat.names) - set(table))
            if missing:
                raise ValueError(f"table misses elements {missing}")
            extra = sorted(set(table) - set(lat.names))
            raise ValueError(f"table mentions unknown elements {extra}")
        return tuple(lat.index(table[name]) for name in lat.names)
    values = list(table)
    if len(values) != lat.n:
        raise ValueError(f"table has {len(values)} rows, carrier has {lat.n}")
    return tuple(lat.index(v) for v in values)


def _delta_checks(lat: BoundedLattice, d: tuple[int, ...]) -> Iterable[tuple[str, tuple[str, ...] | None]]:
    """First witness per weak-complementation axiom, in pinned order."""
    names = lat.names
    witness = None
    for x in range(lat.n):
        if not lat.leq(d[d[x]], x):
            witness = (names[x],)
            break
    yield LAW_DELTA_DOUBLE, witness
    witness = None
    for x in range(lat.n):
        for y in range(lat.n):
            if lat.leq(x, y) and not lat.leq(d[y], d[x]):
                witness = (names[x], names[y])
                break
        if witness:
            break
    yield LAW_DELTA_ANTITONE, witness
    witness = None
    for x in range(lat.n):
        for y in range(lat.n):
            if lat.join(lat.meet(x, y), lat.meet(x, d[y])) != x:
                witness = (names[x], names[y])
                break
        if witness:
            break
    yield LAW_DELTA_SPLIT, witness


def _nabla_checks(lat: BoundedLattice, n: tuple[int, ...]) -> Iterable[tuple[str, tuple[str, ...] | None]]:
    names = lat.names
    witness = None
    for x in range(lat.n):
        if not lat.leq(x, n[n[x]]):
            witness = (names[x],)
            break
    yield LAW_NABLA_DOUBLE, witness
    witness = None
    for x in range(lat.n):
        for y in range(lat.n):
            if lat.leq(x, y) and not lat.leq(n[y], n[x]):
                witness = (names[x], names[y])
                break
        if witness:
            break
    yield LAW_NABLA_ANTITONE, witness
    witness = None
    for x in range(lat.n):
        for y in range(lat.n):
            if lat.meet(lat.join(x, y), lat.join(x, n[y])) != x:
                witness = (names[x], names[y])
                break
        if witness:
            break
    yield LAW_NABLA_SPLIT, witness


def _cross_check(lat: BoundedLattice, d: tuple[int, ...],
                 n: tuple[int, ...]) -> tuple[str, ...] | None:
    for x in range(lat.n):
        if not lat.leq(n[x], d[x]):
            return (lat.names[x],)
    return None


def attach(base: BoundedLattice,
           delta: Mapping[str, str] | Sequence[str] | None = None,
           nabla: Mapping[str, str] | Sequence[str] | None = None) -> Dicomplementation:
    """Validate the given unary tables and attach them to the lattice.

    Axioms are checked exhaustively; the first violation in scan order
    raises AxiomViolation carrying the law id and the witness names.
    """
    if delta is None and nabla is None:
        raise ValueError("need at least one unary table")
    d = _as_index_table(base, delta) if delta is not None else None
    n = _as_index_table(base, nabla) if nabla is not None else None
    if d is not None:
        for law_id, witness in _delta_checks(base, d):
            if witness is not None:
                raise AxiomViolation(law_id, witness)
    if n is not None:
        for law_id, witness in _nabla_checks(base, n):
            if witness is not None:
                raise AxiomViolation(law_id, witness)
    if d is not None and n is not None:
        witness = _cross_check(base, d, n)
        if witness is not None:
            raise AxiomViolation(LAW_NABLA_BELOW_DELTA, witness)
    return Dicomplementation(base, d, n)


def axiom_report(D: Dicomplementation) -> Report:
    """All defining axioms as report rows, skipping absent tables."""
    rep = Report(subject="axioms")
    if D.has_delta:
        for law_id, witness in _delta_checks(D.base, D._delta):
            rep.add(law_id, witness is None, witness)
    else:
        for law_id in (LAW_DELTA_DOUBLE, LAW_DELTA_ANTITONE, LAW_DELTA_SPLIT):
            rep.skip(law_id, "no weak complementation table")
    if D.has_nabla:
        for law_id, witness in _nabla_checks(D.base, D._nabla):
            rep.add(law_id, witness is None, witness)
    else:
        for law_id in (LAW_NABLA_DOUBLE, LAW_NABLA_ANTITONE, LAW_NABLA_SPLIT):
            rep.skip(law_id, "no dual weak complementation table")
    if D.has_delta and D.has_nabla:
        witness = _cross_check(D.base, D._delta, D._nabla)
        rep.add(LAW_NABLA_BELOW_DELTA, witness is None, witness)
    else:
        rep.skip(LAW_NABLA_BELOW_DELTA, "needs both tables")
    return rep


# --- standard constructions ---------------------------------------------


def trivial_dicomplementation(base: BoundedLattice) -> Dicomplementation:
    """x^d = 1 except 1^d = 0, and x^n = 0 except 0^n = 1."""
    names = base.names
    top, bottom = names[base.top], names[base.bottom]
    delta = {x: bottom if x == top else top for x in names}
    nabla = {x: top if x == bottom else bottom for x in names}
    return attach(base, delta, nabla)


def boolean_dicomplementation(base: BoundedLattice) -> Dicomplementation:
    """Both tables equal to the Boolean complement.

    Requires a distributive lattice in which every element has a
    complement; NotBoolean otherwise.
    """
    if not base.is_distributive():
        witness = base.distributivity_witness()
        raise NotBoolean(f"not distributive, witness {witness}")
    table = {}
    for i, name in enumerate(base.names):
        comp = [j for j in range(base.n)
                if base.meet(i, j) == base.bottom and base.join(i, j) == base.top]
        if not comp:
            raise NotBoolean(f"element {name!r} has no complement", witness=name)
        # distributive, so the complement is unique
        table[name] = base.names[comp[0]]
    return attach(base, table, table)


def derived_ops(D: Dicomplementation, x: str, y: str) -> tuple[str, str, str]:
    """(join_closure, meet_interior, join_interior) at one pair."""
    return (D.join_closure(x, y), D.meet_interior(x, y), D.join_interior(x, y))


# --- skeletons ------------------------------------------------------------


def skeleton(D: Dicomplementation) -> tuple[str, ...]:
    """Fixed points of the closure map x^nn."""
    return tuple(D.base.names[i] for i in D.closure_fixed())


def dual_skeleton(D: Dicomplementation) -> tuple[str, ...]:
    """Fixed points of the interior map x^dd."""
    return tuple(D.base.names[i] for i in D.interior_fixed())


class SkeletonAlgebra:
    """Ortholattice carried by a skeleton.

    The interior side lives on the fixed points of x^dd with meet
    meet_interior, join inherited from the base lattice and complement
    the weak complement; the closed side is the order dual picture.
    """

    def __init__(self, side: str, carrier: tuple[str, ...],
                 lattice: BoundedLattice, complement: dict[str, str],
                 meet: Callable[[str, str], str], join: Callable[[str, str], str]):
        self.side = side
        self.carrier = carrier
        self.lattice = lattice
        self.complement_table = complement
        self._meet = meet
        self._join = join

    def meet(self, x: str, y: str) -> str:
        return self._meet(x, y)

    def join(self, x: str, y: str) -> str:
        return self._join(x, y)

    def complement(self, x: str) -> str:
        return self.complement_table[x]

    def __repr__(self) -> str:
        return f"SkeletonAlgebra(side={self.side!r}, carrier={self.carrier})"


for _side in ("interior", "closed"):
    law(f"skeleton.{_side}.carrier-closed",
        "skeleton contains the bounds and is closed under its operations")
    law(f"skeleton.{_side}.lattice-agrees",
        "skeleton operations are the lattice operations of the restricted order")
    law(f"skeleton.{_side}.ortho-involution", "complement is an involution")
    law(f"skeleton.{_side}.ortho-antitone", "complement reverses order")
    law(f"skeleton.{_side}.ortho-bounds",
        "x meet x' = bottom and x join x' = top inside the skeleton")
del _side


def _skeleton_pieces(D: Dicomplementation, side: str):
    lat = D.base
    if side == "interior":
        table = D._need("delta")
        carrier = D.interior_fixed()
        op_meet = lambda i, j: table[lat.join(table[i], table[j])]
        op_join = lat.join
    elif side == "closed":
        table = D._need("nabla")
        carrier = D.closure_fixed()
        op_meet = lat.meet
        op_join = lambda i, j: table[lat.meet(table[i], table[j])]
    else:
        raise ValueError(f"side must be 'closed' or 'interior', not {side!r}")
    return table, carrier, op_meet, op_join


def skeleton_report(D: Dicomplementation, side: str) -> Report:
    """Check the ortholattice laws of one skeleton, without raising."""
    table, carrier, op_meet, op_join = _skeleton_pieces(D, side)
    lat = D.base
    names = lat.names
    rep = Report(subject=f"skeleton.{side}")
    inside = set(carrier)

    witness = None
    if lat.bottom not in inside or lat.top not in inside:
        witness = (names[lat.bottom] if lat.bottom not in inside else names[lat.top],)
    else:
        for i in carrier:
            if table[i] not in inside:
                witness = (names[i],)
                break
            for j in carrier:
                if op_meet(i, j) not in inside or op_join(i, j) not in inside:
                    witness = (names[i], names[j])
                    break
            if witness:
                break
    rep.add(f"skeleton.{side}.carrier-closed", witness is None, witness)
    if witness is not None:
        return rep

    sub_names = tuple(names[i] for i in carrier)
    pos = {i: k for k, i in enumerate(carrier)}
    up = tuple(sum(1 << pos[j] for j in carrier if lat.leq(i, j)) for i in carrier)
    try:
        sub = BoundedLattice(sub_names, up)
    except (NotBounded, NotALattice) as exc:
        rep.add(f"skeleton.{side}.lattice-agrees", False, None, note=str(exc))
        return rep
    witness = None
    for a in carrier:
        for b in carrier:
            if (pos[op_meet(a, b)] != sub.meet(pos[a], pos[b])
                    or pos[op_join(a, b)] != sub.join(pos[a], pos[b])):
                witness = (names[a], names[b])
                break
        if witness:
            break
    rep.add(f"skeleton.{side}.lattice-agrees", witness is None, witness)

    witness = next(((names[i],) for i in carrier if table[table[i]] != i), None)
    rep.add(f"skeleton.{side}.ortho-involution", witness is None, witness)
    witness = next(((names[i], names[j]) for i in carrier for j in carrier
                    if lat.leq(i, j) and not lat.leq(table[j], table[i])), None)
    rep.add(f"skeleton.{side}.ortho-antitone", witness is None, witness)
    witness = next(((names[i],) for i in carrier
                    if op_meet(i, table[i]) != lat.bottom
                    or op_join(i, table[i]) != lat.top), None)
    rep.add(f"skeleton.{side}.ortho-bounds", witness is None, witness)
    return rep


def skeleton_algebra(D: Dicomplementation, side: str) -> SkeletonAlgebra:
    """Build one skeleton ortholattice, validating its laws.

    A violation on a validated dicomplementation would falsify the
    underlying theorems, so it is raised as OrtholawViolation rather
    than reported.
    """
    rep = skeleton_report(D, side)
    bad = rep.failures()
    if bad:
        raise OrtholawViolation(f"{bad[0].law_id} at {bad[0].witness}")
    table, carrier, op_meet, op_join = _skeleton_pieces(D, side)
    lat = D.base
    names = lat.names
    pos = {i: k for k, i in enumerate(carrier)}
    up = tuple(sum(1 << pos[j] for j in carrier if lat.leq(i, j)) for i in carrier)
    sub = BoundedLattice(tuple(names[i] for i in carrier), up)
    complement = {names[i]: names[table[i]] for i in carrier}

    def meet(x: str, y: str) -> str:
        return names[op_meet(lat.index(x), lat.index(y))]

    def join(x: str, y: str) -> str:
        return names[op_join(lat.index(x), lat.index(y))]

    return SkeletonAlgebra(side, sub.names, sub, complement, meet, join)


# --- dense and codense parts ------------------------------------------------


def dense_sets(D: Dicomplementation) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """(dense part, codense part); needs both unary tables."""
    return D.dense_part(), D.codense_part()


law("dense.contains-top", "the top element is dense")
law("dense.up-closed", "the dense part is an up-set")
law("dense.join-closed", "joins of dense elements are dense")
law("dense.nearlattice",
    "every principal up-set inside the dense part is a bounded lattice")
law("dense.distributive-parts",
    "principal parts of the dense part are distributive when the base is")
law("dense.filter-when-least",
    "a dense part with a least element is a filter")
law("codense.contains-bottom", "the bottom element is codense")
law("codense.down-closed", "the codense part is a down-set")
law("codense.meet-closed", "meets of codense elements are codense")
law("codense.nearlattice",
    "every principal down-set inside the codense part is a bounded lattice")
law("codense.distributive-parts",
    "principal parts of the codense part are distributive when the base is")
law("codense.ideal-when-greatest",
    "a codense part with a greatest element is an ideal")


def _subposet_lattice(lat: BoundedLattice,
                      members: tuple[int, ...]) -> BoundedLattice | None:
    pos = {i: k for k, i in enumerate(members)}
    up = tuple(sum(1 << pos[j] for j in members if lat.leq(i, j)) for i in members)
    try:
        return BoundedLattice(tuple(lat.names[i] for i in members), up)
    except (NotBounded, NotALattice):
        return None


def _nearlattice_side(rep: Report, lat: BoundedLattice, part: tuple[int, ...],
                      prefix: str, upward: bool) -> None:
    names = lat.names
    inside = set(part)
    bound = lat.top if upward else lat.bottom
    contains = "dense.contains-top" if upward else "codense.contains-bottom"
    rep.add(contains, bound in inside, (names[bound],))

    def above(i: int, j: int) -> bool:
        return lat.leq(i, j) if upward else lat.leq(j, i)

    witness = next(((names[i], names[j]) for i in part for j in range(lat.n)
                    if above(i, j) and j not in inside), None)
    rep.add(f"{prefix}.{'up-closed' if upward else 'down-closed'}",
            witness is None, witness)
    combine = lat.join if upward else lat.meet
    witness = next(((names[i], names[j]) for i in part for j in part
                    if combine(i, j) not in inside), None)
    rep.add(f"{prefix}.{'join-closed' if upward else 'meet-closed'}",
            witness is None, witness)

    parts_ok, dist_witness = None, None
    for a in part:
        members = tuple(i for i in part if above(a, i))
        sub = _subposet_lattice(lat, members)
        if sub is None:
            parts_ok = (names[a],)
            break
        if dist_witness is None and not sub.is_distributive():
            dist_witness = (names[a],) + (sub.distributivity_witness() or ())
    rep.add(f"{prefix}.nearlattice", parts_ok is None, parts_ok)
    dist_law = f"{prefix}.distributive-parts"
    if not lat.is_distributive():
        rep.skip(dist_law, "base lattice is not distributive")
    elif parts_ok is not None:
        rep.skip(dist_law, "a principal part is not a lattice")
    else:
        rep.add(dist_law, dist_witness is None, dist_witness)

    least = [i for i in part if all(above(i, j) for j in part)]
    whole_law = f"{prefix}.{'filter-when-least' if upward else 'ideal-when-greatest'}"
    if not least:
        rep.skip(whole_law, "no extreme element in the part")
    else:
        other = lat.meet if upward else lat.join
        witness = next(((names[i], names[j]) for i in part for j in part
                        if other(i, j) not in inside), None)
        rep.add(whole_law, witness is None, witness,
                note=f"extreme element {names[least[0]]}")


def nearlattice_check(D: Dicomplementation) -> Report:
    """Dense and codense part structure, for whichever tables exist."""
    rep = Report(subject="dense/codense")
    lat = D.base
    if D.has_nabla:
        part = tuple(lat.index(x) for x in D.dense_part())
        _nearlattice_side(rep, lat, part, "dense", upward=True)
    else:
        for law_id in ("dense.contains-top", "dense.up-closed", "dense.join-closed",
                       "dense.nearlattice", "dense.distributive-parts",
                       "dense.filter-when-least"):
            rep.skip(law_id, "no dual weak complementation table")
    if D.has_delta:
        part = tuple(lat.index(x) for x in D.codense_part())
        _nearlattice_side(rep, lat, part, "codense", upward=False)
    else:
        for law_id in ("codense.contains-bottom", "codense.down-closed",
                       "codense.meet-closed", "codense.nearlattice",
                       "codense.distributive-parts", "codense.ideal-when-greatest"):
            rep.skip(law_id, "no weak complementation table")
    return rep


# --- identity catalogue -----------------------------------------------------

# Each entry: (law id, description, tables needed, checker at index level).
# Checkers return the first witness in scan order or None.


def _identity_catalogue():
    def demorgan_meet(lat, d, n):
        return next(((i, j) for i in range(lat.n) for j in range(lat.n)
                     if d[lat.meet(i, j)] != lat.join(d[i], d[j])), None)

    def meet_interior_forms(lat, d, n):
        return next(((i, j) for i in range(lat.n) for j in range(lat.n)
                     if d[lat.join(d[i], d[j])] != d[d[lat.meet(i, j)]]), None)

    def delta_galois(lat, d, n):
        return next(((i, j) for i in range(lat.n) for j in range(lat.n)
                     if lat.leq(d[i], j) != lat.leq(d[j], i)), None)

    def delta_join_top(lat, d, n):
        return next(((i, j) for i in range(lat.n) for j in range(lat.n)
                     if lat.leq(d[i], j) and lat.join(j, i) != lat.top), None)

    def delta_meet_zero(lat, d, n):
        return next(((i, j) for i in range(lat.n) for j in range(lat.n)
                     if lat.meet(j, i) == lat.bottom and not lat.leq(i, d[j])), None)

    def delta_complement(lat, d, n):
        return next(((i,) for i in range(lat.n)
                     if lat.join(i, d[i]) != lat.top), None)

    def demorgan_join(lat, d, n):
        return next(((i, j) for i in range(lat.n) for j in range(lat.n)
                     if n[lat.join(i, j)] != lat.meet(n[i], n[j])), None)

    def join_closure_forms(lat, d, n):
        return next(((i, j) for i in range(lat.n) for j in range(lat.n)
                     if n[lat.meet(n[i], n[j])] != n[n[lat.join(i, j)]]), None)

    def nabla_galois(lat, d, n):
        return next(((i, j) for i in range(lat.n) for j in range(lat.n)
                     if lat.leq(j, n[i]) != lat.leq(i, n[j])), None)

    def nabla_meet_zero(lat, d, n):
        return next(((i, j) for i in range(lat.n) for j in range(lat.n)
                     if lat.leq(j, n[i]) and lat.meet(j, i) != lat.bottom), None)

    def nabla_join_one(lat, d, n):
        return next(((i, j) for i in range(lat.n) for j in range(lat.n)
                     if lat.join(j, i) == lat.top and not lat.leq(n[j], i)), None)

    def nabla_complement(lat, d, n):
        return next(((i,) for i in range(lat.n)
                     if lat.meet(i, n[i]) != lat.bottom), None)

    def nabla_below(lat, d, n):
        return _cross_index(lat, d, n)

    def mi(lat, d):
        return lambda i, j: d[lat.join(d[i], d[j])]

    def jc(lat, n):
        return lambda i, j: n[lat.meet(n[i], n[j])]

    def meet_interior_below(lat, d, n):
        f = mi(lat, d)
        return next(((i, j) for i in range(lat.n) for j in range(lat.n)
                     if not lat.leq(f(i, j), lat.meet(i, j))), None)

    def join_interior_below(lat, d, n):
        return next(((i, j) for i in range(lat.n) for j in range(lat.n)
                     if not lat.leq(d[d[lat.join(i, j)]], lat.join(i, j))), None)

    def join_closure_above(lat, d, n):
        f = jc(lat, n)
        return next(((i, j) for i in range(lat.n) for j in range(lat.n)
                     if not lat.leq(lat.join(i, j), f(i, j))), None)

    def join_closure_translation(lat, d, n):
        f = jc(lat, n)
        for x in range(lat.n):
            for a in range(lat.n):
                for b in range(lat.n):
                    if lat.leq(a, b) and not lat.leq(f(x, a), f(x, b)):
                        return (x, a, b)
                    if f(x, f(a, b)) != f(f(x, a), f(x, b)):
                        return (x, a, b)
        return None

    def meet_interior_translation(lat, d, n):
        f = mi(lat, d)
        for x in range(lat.n):
            for a in range(lat.n):
                for b in range(lat.n):
                    if lat.leq(x, a) and not lat.leq(f(x, b), f(a, b)):
                        return (x, a, b)
                    if f(f(x, a), b) != f(f(x, b), f(a, b)):
                        return (x, a, b)
        return None

    def meet_interior_absorb(lat, d, n):
        f = mi(lat, d)
        return next(((i, j) for i in range(lat.n) for j in range(lat.n)
                     if lat.join(i, f(i, j)) != i), None)

    def meet_interior_of_join(lat, d, n):
        f = mi(lat, d)
        return next(((i, j) for i in range(lat.n) for j in range(lat.n)
                     if f(i, lat.join(i, j)) != d[d[i]]), None)

    def join_closure_absorb(lat, d, n):
        f = jc(lat, n)
        return next(((i, j) for i in range(lat.n) for j in range(lat.n)
                     if lat.meet(i, f(i, j)) != i), None)

    def join_closure_of_meet(lat, d, n):
        f = jc(lat, n)
        return next(((i, j) for i in range(lat.n) for j in range(lat.n)
                     if f(i, lat.meet(i, j)) != n[n[i]]), None)

    def meet_interior_invariant(lat, d, n):
        f = mi(lat, d)
        return next(((i, j) for i in range(lat.n) for j in range(lat.n)
                     if not f(d[d[i]], d[d[j]]) == f(d[d[i]], j) == f(i, j)), None)

    def join_closure_invariant(lat, d, n):
        f = jc(lat, n)
        return next(((i, j) for i in range(lat.n) for j in range(lat.n)
                     if not f(n[n[i]], n[n[j]]) == f(n[n[i]], j) == f(i, j)), None)

    def meet_interior_monotone(lat, d, n):
        f = mi(lat, d)
        return next(((i, j, a) for i in range(lat.n) for j in range(lat.n)
                     for a in range(lat.n)
                     if lat.leq(i, j) and not lat.leq(f(i, a), f(j, a))), None)

    def join_closure_monotone(lat, d, n):
        f = jc(lat, n)
        return next(((i, j, a) for i in range(lat.n) for j in range(lat.n)
                     for a in range(lat.n)
                     if lat.leq(i, j) and not lat.leq(f(i, a), f(j, a))), None)

    return (
        ("identity.delta.demorgan-meet", "(x & y)^d = x^d | y^d", "d", demorgan_meet),
        ("identity.meet-interior.two-forms",
         "(x^d | y^d)^d = (x & y)^dd", "d", meet_interior_forms),
        ("identity.delta.galois-swap", "x^d <= y iff y^d <= x", "d", delta_galois),
        ("identity.delta.join-top", "x^d <= y implies y | x = 1", "d", delta_join_top),
        ("identity.delta.meet-zero-bound",
         "y & x = 0 implies x <= y^d", "d", delta_meet_zero),
        ("identity.delta.complement-join", "x | x^d = 1", "d", delta_complement),
        ("identity.nabla.demorgan-join", "(x | y)^n = x^n & y^n", "n", demorgan_join),
        ("identity.join-closure.two-forms",
         "(x^n & y^n)^n = (x | y)^nn", "n", join_closure_forms),
        ("identity.nabla.galois-swap", "y <= x^n iff x <= y^n", "n", nabla_galois),
        ("identity.nabla.meet-bottom", "y <= x^n implies y & x = 0", "n", nabla_meet_zero),
        ("identity.nabla.join-one-bound",
         "y | x = 1 implies y^n <= x", "n", nabla_join_one),
        ("identity.nabla.complement-meet", "x & x^n = 0", "n", nabla_complement),
        ("identity.nabla.below-delta", "x^n <= x^d", "dn", nabla_below),
        ("identity.meet-interior.below-meet",
         "meet_interior(x, y) <= x & y", "d", meet_interior_below),
        ("identity.join-interior.below-join",
         "join_interior(x, y) <= x | y", "d", join_interior_below),
        ("identity.join-closure.above-join",
         "x | y <= join_closure(x, y)", "n", join_closure_above),
        ("identity.join-closure.translation",
         "a -> join_closure(x, a) preserves order and join_closure", "n",
         join_closure_translation),
        ("identity.meet-interior.translation",
         "x -> meet_interior(x, a) preserves order and meet_interior", "d",
         meet_interior_translation),
        ("identity.meet-interior.absorb-join",
         "x | meet_interior(x, y) = x", "d", meet_interior_absorb),
        ("identity.meet-interior.of-join",
         "meet_interior(x, x | y) = x^dd", "d", meet_interior_of_join),
        ("identity.join-closure.absorb-meet",
         "x & join_closure(x, y) = x", "n", join_closure_absorb),
        ("identity.join-closure.of-meet",
         "join_closure(x, x & y) = x^nn", "n", join_closure_of_meet),
        ("identity.meet-interior.interior-invariant",
         "meet_interior ignores the interior of its arguments", "d",
         meet_interior_invariant),
        ("identity.join-closure.closure-invariant",
         "join_closure ignores the closure of its arguments", "n",
         join_closure_invariant),
        ("identity.meet-interior.monotone",
         "meet_interior is monotone in each argument", "d", meet_interior_monotone),
        ("identity.join-closure.monotone",
         "join_closure is monotone in each argument", "n", join_closure_monotone),
    )


def _cross_index(lat, d, n):
    return next(((i,) for i in range(lat.n) if not lat.leq(n[i], d[i])), None)


_IDENTITIES = _identity_catalogue()
for _law_id, _descr, _needs, _fn in _IDENTITIES:
    law(_law_id, _descr)
del _law_id, _descr, _needs, _fn


def check_identities(D: Dicomplementation) -> Report:
    """Evaluate every identity and implication exhaustively."""
    rep = Report(subject="identities")
    lat = D.base
    for law_id, _descr, needs, fn in _IDENTITIES:
        if "d" in needs and not D.has_delta:
            rep.skip(law_id, "no weak complementation table")
            continue
        if "n" in needs and not D.has_nabla:
            rep.skip(law_id, "no dual weak complementation table")
            continue
        witness = fn(lat, D._delta, D._nabla)
        names = None if witness is None else tuple(lat.names[i] for i in witness)
        rep.add(law_id, witness is None, names)
    return rep


# --- enumeration ------------------------------------------------------------


def _weak_complement_tables(lat: BoundedLattice) -> list[tuple[int, ...]]:
    """All weak complementation tables, lexicographic in element index."""
    n = lat.n
    # x | x^d = 1 is forced, so candidate values sit among the
    # join-complements of x; antitonicity prunes against assigned rows.
    candidates = [[c for c in range(n) if lat.join(x, c) == lat.top]
                  for x in range(n)]
    out: list[tuple[int, ...]] = []
    row = [0] * n

    def extend(x: int) -> None:
        if x == n:
            table = tuple(row)
            if all(w is None for _law, w in _delta_checks(lat, table)):
                out.append(table)
            return
        for c in candidates[x]:
            ok = True
            for y in range(x):
                if lat.leq(y, x) and not lat.leq(c, row[y]):
                    ok = False
                    break
                if lat.leq(x, y) and not lat.leq(row[y], c):
                    ok = False
                    break
            if ok:
                row[x] = c
                extend(x + 1)
        row[x] = 0

    extend(0)
    return out


def enumerate_dicomplementations(base: BoundedLattice, side: str = "delta",
                                 max_size: int = ENUMERATION_CAP) -> list[Dicomplementation]:
    """Every admissible table (or pair of tables) on a small lattice."""
    if side not in ("delta", "nabla", "both"):
        raise ValueError(f"side must be 'delta', 'nabla' or 'both', not {side!r}")
    if base.n > max_size:
        raise SizeCapExceeded(
            f"enumeration capped at {max_size} elements, lattice has {base.n}")
    if side in ("delta", "both"):
        deltas = _weak_complement_tables(base)
    if side in ("nabla", "both"):
        # a dual weak complementation is a weak complementation of the dual
        nablas = sorted(_weak_complement_tables(base.dual()))
    if side == "delta":
        return [Dicomplementation(base, d, None) for d in deltas]
    if side == "nabla":
        return [Dicomplementation(base, None, nb) for nb in nablas]
    return [Dicomplementation(base, d, nb) for d in deltas for nb in nablas]
