"""Finite bounded lattices over named elements.

Elements are addressed by index; subsets of the carrier are plain int
bitmasks (bit i set means element i is in the set). The order relation
is stored as one up-set mask per element, and the meet and join tables
are materialised at construction time, so every later operation is a
table lookup.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import (
    NotALattice,
    NotAPoset,
    NotBounded,
    SizeCapExceeded,
    UnknownElement,
)

MAX_ELEMENTS = 64


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


@dataclass(frozen=True)
class LatticeSpec:
    """Declarative description of a bounded lattice with optional unary tables.

    covers lists (lower, upper) pairs; delta and nabla, when present,
    list (element, image) pairs.
    """

    elements: tuple[str, ...]
    covers: tuple[tuple[str, str], ...]
    delta: tuple[tuple[str, str], ...] | None = None
    nabla: tuple[tuple[str, str], ...] | None = None


class BoundedLattice:
    """A finite bounded lattice with materialised operation tables.

    The constructor expects the reflexive-transitive up-set masks and
    validates antisymmetry, bounds and the existence of all binary
    meets and joins, in that order.
    """

    def __init__(self, names: tuple[str, ...], up: tuple[int, ...]):
        if len(names) == 0:
            raise NotBounded("empty carrier has no bottom or top")
        if len(set(names)) != len(names):
            raise NotAPoset("element names are not unique")
        if len(up) != len(names):
            raise NotAPoset("up-set list does not match the carrier")
        n = len(names)
        full = (1 << n) - 1
        for i in range(n):
            if not up[i] >> i & 1:
                raise NotAPoset(f"order not reflexive at {names[i]}")
            if up[i] & ~full:
                raise NotAPoset("up-set mask out of range")
        for i in range(n):
            for j in bits(up[i]):
                if i != j and up[j] >> i & 1:
                    raise NotAPoset(f"cycle through {names[i]} and {names[j]}")
                if not is_subset(up[j], up[i]):
                    raise NotAPoset(
                        f"order not transitive at {names[i]} <= {names[j]}")
        self.names = tuple(names)
        self.n = n
        self.up = tuple(up)
        down = [0] * n
        for j in range(n):
            for i in bits(up[j]):
                down[i] |= 1 << j
        self.down = tuple(down)
        self._index = {name: i for i, name in enumerate(names)}

        bottoms = [i for i in range(n) if up[i] == full]
        tops = [i for i in range(n) if up[i] == 1 << i]
        if len(bottoms) != 1:
            raise NotBounded(f"{len(bottoms)} minimal lower bounds, need exactly 1")
        if len(tops) != 1:
            raise NotBounded(f"{len(tops)} maximal upper bounds, need exactly 1")
        self.bottom = bottoms[0]
        self.top = tops[0]

        meet = [[0] * n for _ in range(n)]
        join = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                common = self.down[i] & self.down[j]
                cand = [k for k in bits(common) if is_subset(common, self.down[k])]
                if len(cand) != 1:
                    raise NotALattice(
                        f"no unique meet for {names[i]}, {names[j]}",
                        (names[i], names[j]))
                meet[i][j] = meet[j][i] = cand[0]
                common = up[i] & up[j]
                cand = [k for k in bits(common) if is_subset(common, up[k])]
                if len(cand) != 1:
                    raise NotALattice(
                        f"no unique join for {names[i]}, {names[j]}",
                        (names[i], names[j]))
                join[i][j] = join[j][i] = cand[0]
        self.meet_table = tuple(tuple(row) for row in meet)
        self.join_table = tuple(tuple(row) for row in join)

    # --- basic queries -------------------------------------------------

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownElement(f"unknown element {name!r}") from None

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def meet(self, i: int, j: int) -> int:
        return self.meet_table[i][j]

    def join(self, i: int, j: int) -> int:
        return self.join_table[i][j]

    def up_set(self, i: int) -> int:
        """Principal filter of element i, as a mask."""
        return self.up[i]

    def down_set(self, i: int) -> int:
        return self.down[i]

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def names_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.names[i] for i in bits(mask))

    def mask_of_names(self, names: Iterable[str]) -> int:
        return mask_of(self.index(name) for name in names)

    def set_name(self, mask: int) -> str:
        """A printable name for a subset, elements in carrier order."""
        return "{" + ",".join(self.names_of(mask)) + "}"

    # --- structure -----------------------------------------------------

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """Transitive reduction as (lower, upper) index pairs."""
        out = []
        for i in range(self.n):
            strict = self.up[i] ^ (1 << i)
            for j in bits(strict):
                if strict & (self.down[j] ^ (1 << j)) == 0:
                    out.append((i, j))
        return tuple(out)

    @cached_property
    def atoms(self) -> tuple[int, ...]:
        return tuple(j for (i, j) in self.covers if i == self.bottom)

    @cached_property
    def coatoms(self) -> tuple[int, ...]:
        return tuple(i for (i, j) in self.covers if j == self.top)

    @cached_property
    def _distributivity_witness(self) -> tuple[int, int, int] | None:
        for x in range(self.n):
            mx = self.meet_table[x]
            for y in range(self.n):
                for z in range(self.n):
                    if mx[self.join_table[y][z]] != \
                            self.join_table[mx[y]][mx[z]]:
                        return (x, y, z)
        return None

    def is_distributive(self) -> bool:
        return self._distributivity_witness is None

    def distributivity_witness(self) -> tuple[str, ...] | None:
        w = self._distributivity_witness
        if w is None:
            return None
        return tuple(self.names[i] for i in w)

    def is_upclosed(self, mask: int) -> bool:
        return all(is_subset(self.up[i], mask) for i in bits(mask))

    def upward_closure(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            out |= self.up[i]
        return out

    def dual(self) -> "BoundedLattice":
        """The order dual; names are kept, meets and joins swap."""
        return BoundedLattice(self.names, self.down)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BoundedLattice):
            return NotImplemented
        return self.names == other.names and self.up == other.up

    def __hash__(self) -> int:
        return hash((self.names, self.up))

    def __repr__(self) -> str:
        return f"BoundedLattice({self.n} elements: {', '.join(self.names)})"


def build_lattice(spec: LatticeSpec, max_size: int = MAX_ELEMENTS) -> BoundedLattice:
    """Build and validate a lattice from a cover-relation spec."""
    names = tuple(spec.elements)
    if len(set(names)) != len(names):
        raise NotAPoset("element names are not unique")
    if len(names) > max_size:
        raise SizeCapExceeded(f"{len(names)} elements exceeds the cap {max_size}")
    index = {name: i for i, name in enumerate(names)}
    n = len(names)
    up = [1 << i for i in range(n)]
    for low, high in spec.covers:
        if low not in index or high not in index:
            missing = low if low not in index else high
            raise UnknownElement(f"cover uses undeclared element {missing!r}")
        up[index[low]] |= 1 << index[high]
    # reflexive-transitive closure
    changed = True
    while changed:
        changed = False
        for i in range(n):
            acc = up[i]
            for j in bits(up[i]):
                acc |= up[j]
            if acc != up[i]:
                up[i] = acc
                changed = True
    return BoundedLattice(names, tuple(up))


def chain(k: int) -> BoundedLattice:
    """The k-element chain 0 < m1 < ... < 1."""
    if k < 1:
        raise NotBounded("a chain needs at least one element")
    if k == 1:
        names: tuple[str, ...] = ("0",)
    elif k == 2:
        names = ("0", "1")
    else:
        names = ("0",) + tuple(f"m{i}" for i in range(1, k - 1)) + ("1",)
    covers = tuple((names[i], names[i + 1]) for i in range(k - 1))
    return build_lattice(LatticeSpec(names, covers))


def direct_power(base: BoundedLattice, k: int,
                 max_size: int = MAX_ELEMENTS) -> BoundedLattice:
    """The k-fold direct power with componentwise order.

    Component tuples are named "(a,b,...)" from the factor names; the
    first power is returned as an identical copy with unchanged names.
    """
    if k < 1:
        raise SizeCapExceeded("direct power needs at least one factor")
    if base.n ** k > max_size:
        raise SizeCapExceeded(
            f"{base.n}^{k} elements exceeds the cap {max_size}")
    if k == 1:
        return BoundedLattice(base.names, base.up)
    tuples = list(itertools.product(range(base.n), repeat=k))
    pos = {t: i for i, t in enumerate(tuples)}
    names = tuple("(" + ",".join(base.names[c] for c in t) + ")" for t in tuples)
    up = []
    for t in tuples:
        m = 0
        for s in tuples:
            if all(base.leq(a, b) for a, b in zip(t, s)):
                m |= 1 << pos[s]
        up.append(m)
    return BoundedLattice(names, tuple(up))


def enumerate_lattices(n: int, max_size: int = 8) -> list[BoundedLattice]:
    """All bounded lattices with n elements, one per isomorphism class.

    Candidate orders are generated inside the natural order of the
    indices (every finite poset admits such a linear extension), closed,
    then deduplicated by the minimal relabelled cover relation. Elements
    are named "0", "1", ... in a linear extension, so index 0 is the
    bottom and index n-1 the top.
    """
    if n < 1:
        return []
    if n > max_size:
        raise SizeCapExceeded(f"lattice enumeration capped at {max_size} elements")
    names = tuple(str(i) for i in range(n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    seen: set[tuple[tuple[int, int], ...]] = set()
    out: list[BoundedLattice] = []
    for choice in itertools.product((False, True), repeat=len(pairs)):
        up = [1 << i for i in range(n)]
        for (i, j), c in zip(pairs, choice):
            if c:
                up[i] |= 1 << j
        changed = True
        while changed:
            changed = False
            for i in range(n):
                acc = up[i]
                for j in bits(up[i]):
                    acc |= up[j]
                if acc != up[i]:
                    up[i] = acc
                    changed = True
        try:
            lat = BoundedLattice(names, tuple(up))
        except (NotBounded, NotALattice):
            continue
        key = min(
            tuple(sorted((perm[i], perm[j]) for (i, j) in lat.covers))
            for perm in itertools.permutations(range(n)))
        if key in seen:
            continue
        seen.add(key)
        out.append(lat)
    return out
