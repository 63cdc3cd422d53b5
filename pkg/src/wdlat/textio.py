"""The lattice text format and DOT export.

One declaration per line, '#' starts a comment, tokens are whitespace
separated:

    elements: 0 u v a b 1
    cover: 0 u
    delta: a b
    nabla: a 0

Duplicate declarations are errors. Serialization is canonical: covers
and unary rows are sorted by carrier position, so parse(serialize(s))
is serialize-stable.
"""

from __future__ import annotations

from .dicomplement import Dicomplementation
from .errors import DuplicateDeclaration, ParseError, UnknownElementInCover
from .lattice import BoundedLattice, LatticeSpec


def parse(text: str) -> LatticeSpec:
    """Read the text format into a declarative spec."""
    elements: tuple[str, ...] | None = None
    covers: list[tuple[str, str]] = []
    delta: list[tuple[str, str]] = []
    nabla: list[tuple[str, str]] = []
    pending: list[tuple[int, str, list[str]]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, colon, rest = line.partition(":")
        key = key.strip()
        if not colon or key not in ("elements", "cover", "delta", "nabla"):
            raise ParseError(f"expected 'elements:', 'cover:', 'delta:' or "
                             f"'nabla:', got {line!r}", line=lineno)
        tokens = rest.split()
        if key == "elements":
            if elements is not None:
                raise DuplicateDeclaration("second elements line", line=lineno)
            if not tokens:
                raise ParseError("no elements", line=lineno)
            seen = set()
            for t in tokens:
                if t in seen:
                    raise DuplicateDeclaration(
                        f"element {t} declared twice", line=lineno)
                seen.add(t)
            elements = tuple(tokens)
        else:
            if len(tokens) != 2:
                raise ParseError(f"{key} needs exactly two tokens", line=lineno)
            pending.append((lineno, key, tokens))

    if elements is None:
        raise ParseError("no elements", line=1)
    carrier = set(elements)
    seen_pairs: set[tuple[str, str]] = set()
    seen_unary: dict[str, set[str]] = {"delta": set(), "nabla": set()}
    for lineno, key, (x, y) in pending:
        if key == "cover":
            if x not in carrier or y not in carrier:
                raise UnknownElementInCover(
                    f"cover mentions undeclared element "
                    f"{x if x not in carrier else y}", line=lineno)
            if (x, y) in seen_pairs:
                raise DuplicateDeclaration(
                    f"cover {x} {y} declared twice", line=lineno)
            seen_pairs.add((x, y))
            covers.append((x, y))
        else:
            if x not in carrier or y not in carrier:
                raise ParseError(
                    f"{key} mentions undeclared element "
                    f"{x if x not in carrier else y}", line=lineno)
            if x in seen_unary[key]:
                raise DuplicateDeclaration(
                    f"{key} for {x} declared twice", line=lineno)
            seen_unary[key].add(x)
            (delta if key == "delta" else nabla).append((x, y))

    return LatticeSpec(elements, tuple(covers),
                       tuple(delta) or None, tuple(nabla) or None)


def normalize(spec: LatticeSpec) -> LatticeSpec:
    """Sort covers and unary rows by carrier position."""
    pos = {name: i for i, name in enumerate(spec.elements)}

    def key2(pair: tuple[str, str]) -> tuple[int, int]:
        return pos[pair[0]], pos[pair[1]]

    return LatticeSpec(
        spec.elements,
        tuple(sorted(spec.covers, key=key2)),
        tuple(sorted(spec.delta, key=lambda p: pos[p[0]])) if spec.delta else None,
        tuple(sorted(spec.nabla, key=lambda p: pos[p[0]])) if spec.nabla else None)


def serialize(spec: LatticeSpec) -> str:
    """Write the canonical text form of a spec."""
    spec = normalize(spec)
    lines = ["elements: " + " ".join(spec.elements)]
    lines.extend(f"cover: {x} {y}" for x, y in spec.covers)
    if spec.delta:
        lines.extend(f"delta: {x} {y}" for x, y in spec.delta)
    if spec.nabla:
        lines.extend(f"nabla: {x} {y}" for x, y in spec.nabla)
    return "\n".join(lines) + "\n"


def spec_of(obj: BoundedLattice | Dicomplementation) -> LatticeSpec:
    """Recover a declarative spec from a built instance."""
    if isinstance(obj, Dicomplementation):
        lat = obj.base
        delta = tuple((x, obj.delta[x]) for x in lat.names) \
            if obj.has_delta else None
        nabla = tuple((x, obj.nabla[x]) for x in lat.names) \
            if obj.has_nabla else None
    else:
        lat, delta, nabla = obj, None, None
    covers = tuple((lat.names[i], lat.names[j]) for i, j in lat.covers)
    return LatticeSpec(lat.names, covers, delta, nabla)


def _quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(obj: BoundedLattice | Dicomplementation) -> str:
    """A Hasse diagram in DOT: cover edges only, skeleton members boxed."""
    if isinstance(obj, Dicomplementation):
        lat = obj.base
        skeleton = set(obj.interior_fixed()) if obj.has_delta else set()
    else:
        lat, skeleton = obj, set()
    lines = ["digraph lattice {",
             "  rankdir=BT;",
             "  edge [dir=none];",
             "  node [shape=ellipse];"]
    for i, name in enumerate(lat.names):
        shape = " [shape=box]" if i in skeleton else ""
        lines.append(f"  {_quote(name)}{shape};")
    for i, j in lat.covers:
        lines.append(f"  {_quote(lat.names[i])} -> {_quote(lat.names[j])};")
    lines.append("}")
    return "\n".join(lines) + "\n"
