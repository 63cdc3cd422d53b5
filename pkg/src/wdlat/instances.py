"""Built-in example instances.

The two seven and six element lattices carry the weak complement and
dual weak complement tables they are usually studied with; the Boolean
members use complementation on both sides, and the trivial instances
send everything except the bounds to the bounds.
"""

from __future__ import annotations

import re

from .dicomplement import (Dicomplementation, attach,
                           boolean_dicomplementation,
                           trivial_dicomplementation)
from .errors import UnknownBuiltin
from .filters import as_filter
from .lattice import LatticeSpec, build_lattice, chain, direct_power
from .reports import FINDING, Report, law
from .sfilters import dagger_witness, s_conditions

L6_SPEC = LatticeSpec(
    elements=("0", "u", "v", "a", "b", "1"),
    covers=(("0", "u"), ("0", "v"), ("u", "a"), ("v", "a"), ("v", "b"),
            ("a", "1"), ("b", "1")),
    delta=(("0", "1"), ("u", "b"), ("v", "1"), ("a", "b"), ("b", "u"),
           ("1", "0")),
    nabla=(("0", "1"), ("u", "v"), ("v", "u"), ("a", "0"), ("b", "0"),
           ("1", "0")),
)

L7_SPEC = LatticeSpec(
    elements=("0", "u", "v", "w", "a", "b", "1"),
    covers=(("0", "u"), ("0", "v"), ("0", "w"), ("u", "a"), ("w", "a"),
            ("w", "b"), ("v", "b"), ("a", "1"), ("b", "1")),
    delta=(("0", "1"), ("u", "1"), ("v", "1"), ("w", "1"), ("a", "b"),
           ("b", "a"), ("1", "0")),
    nabla=(("0", "1"), ("u", "v"), ("v", "u"), ("w", "0"), ("a", "0"),
           ("b", "0"), ("1", "0")),
)


def _from_spec(spec: LatticeSpec) -> Dicomplementation:
    lat = build_lattice(spec)
    return attach(lat, delta=dict(spec.delta) if spec.delta else None,
                  nabla=dict(spec.nabla) if spec.nabla else None)


_FIXED = {
    "L6": lambda: _from_spec(L6_SPEC),
    "L7": lambda: _from_spec(L7_SPEC),
    "B2": lambda: boolean_dicomplementation(chain(2)),
    "B4": lambda: boolean_dicomplementation(direct_power(chain(2), 2)),
    "B8": lambda: boolean_dicomplementation(direct_power(chain(2), 3)),
    "L6-trivial": lambda: trivial_dicomplementation(build_lattice(
        LatticeSpec(L6_SPEC.elements, L6_SPEC.covers))),
}

_CHAIN = re.compile(r"chain-([0-9]+)-trivial\Z")

BUILTIN_NAMES = tuple(sorted(_FIXED)) + ("chain-n-trivial",)


def builtin(name: str) -> Dicomplementation:
    """A named example instance; chain-n-trivial takes a literal length."""
    if name in _FIXED:
        return _FIXED[name]()
    m = _CHAIN.match(name)
    if m:
        return trivial_dicomplementation(chain(int(m.group(1))))
    raise UnknownBuiltin(
        f"no builtin named {name!r}; choose from {', '.join(BUILTIN_NAMES)}")


def corpus() -> list[tuple[str, Dicomplementation]]:
    """The named instances every test suite runs against."""
    names = ["L6", "L7", "B2", "B4", "B8", "L6-trivial", "chain-3-trivial"]
    return [(n, builtin(n)) for n in names]


# Filter statuses for the interior meet condition as they are recorded in
# the source material for these instances.  Where computation disagrees,
# the divergence is reported as a finding (not a failure) and pinned by
# the test suite so it cannot silently disappear.
RECORDED_DAGGER: dict[str, tuple[tuple[tuple[str, ...], bool], ...]] = {
    "L6": ((("a", "1"), True), (("b", "1"), True), (("u", "a", "1"), True),
           (("v", "a", "b", "1"), False)),
}

law("recorded.dagger-status",
    "the interior meet condition matches the status recorded with the instance")


def recorded_findings_report(name: str, D: Dicomplementation) -> Report:
    """Check each recorded filter status against computation."""
    rep = Report(subject="recorded statuses")
    records = RECORDED_DAGGER.get(name)
    if not records:
        rep.skip("recorded.dagger-status",
                 "no recorded statuses for this instance")
        return rep
    for members, recorded in records:
        F = as_filter(D.base, members)
        computed = s_conditions(D, F)[0]
        witness = None
        if computed != recorded:
            shape = "{" + ",".join(members) + "}"
            witness = (shape,) + (dagger_witness(D, F) or ())
        rep.add("recorded.dagger-status", computed == recorded, witness,
                on_fail=FINDING)
    return rep
