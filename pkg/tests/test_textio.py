"""The plain text lattice format, canonical form and DOT export."""

import pytest
from hypothesis import given, strategies

from wdlat import (
    attach,
    build_lattice,
    builtin,
    corpus,
    normalize,
    parse,
    serialize,
    spec_of,
    to_dot,
)
from wdlat.errors import (
    DuplicateDeclaration,
    FormatError,
    ParseError,
    UnknownElementInCover,
)

L6_TEXT = """\
elements: 0 u v a b 1
cover: 0 u
cover: 0 v
cover: u a
cover: v a
cover: v b
cover: a 1
cover: b 1
delta: 0 1
delta: u b
delta: v 1
delta: a b
delta: b u
delta: 1 0
nabla: 0 1
nabla: u v
nabla: v u
nabla: a 0
nabla: b 0
nabla: 1 0
"""


# --- round trips ----------------------------------------------------------------


def test_serialize_l6(L6):
    assert serialize(spec_of(L6)) == L6_TEXT


def test_parse_serialize_roundtrip(full_corpus):
    for name, D in full_corpus:
        text = serialize(spec_of(D))
        spec = parse(text)
        assert serialize(normalize(spec)) == text, name
        rebuilt = attach(build_lattice(spec),
                         delta=dict(spec.delta) if spec.delta else None,
                         nabla=dict(spec.nabla) if spec.nabla else None)
        assert rebuilt.base.names == D.base.names, name
        if D.has_delta:
            assert rebuilt.delta == D.delta, name
        if D.has_nabla:
            assert rebuilt.nabla == D.nabla, name


def test_spec_of_bare_lattice():
    lat = build_lattice(parse("elements: 0 1\ncover: 0 1\n"))
    spec = spec_of(lat)
    assert spec.delta is None and spec.nabla is None
    assert spec.covers == (("0", "1"),)


def test_rows_before_elements_line_are_allowed():
    spec = parse("cover: x y\nelements: x y\n")
    assert spec.covers == (("x", "y"),)


def test_normalize_sorts_rows():
    a = parse("elements: 0 a 1\ncover: a 1\ncover: 0 a\ndelta: 1 0\n"
              "delta: 0 1\ndelta: a 1\n")
    b = normalize(a)
    assert b.covers == (("0", "a"), ("a", "1"))
    assert b.delta == (("0", "1"), ("a", "1"), ("1", "0"))
    assert normalize(b) == b


# --- parse errors with line numbers -----------------------------------------------


def test_unknown_directive():
    with pytest.raises(ParseError, match="line 1"):
        parse("covers: a b\n")


def test_missing_elements():
    with pytest.raises(ParseError, match="no elements"):
        parse("# only a comment\n")


def test_wrong_arity():
    with pytest.raises(ParseError, match="line 2: cover needs exactly two"):
        parse("elements: a b\ncover: a\n")


def test_duplicate_element():
    with pytest.raises(DuplicateDeclaration, match="element a declared twice"):
        parse("elements: a a\n")


def test_second_elements_line():
    with pytest.raises(DuplicateDeclaration, match="line 2"):
        parse("elements: a b\nelements: a b\n")


def test_duplicate_cover():
    with pytest.raises(DuplicateDeclaration, match="line 3"):
        parse("elements: a b\ncover: a b\ncover: a b\n")


def test_duplicate_unary_row():
    with pytest.raises(DuplicateDeclaration, match="delta for a"):
        parse("elements: a b\ndelta: a b\ndelta: a a\n")


def test_undeclared_element_in_cover():
    with pytest.raises(UnknownElementInCover, match="undeclared element c"):
        parse("elements: a b\ncover: a c\n")


def test_format_errors_are_lattice_errors():
    for exc in (ParseError, DuplicateDeclaration, UnknownElementInCover):
        assert issubclass(exc, FormatError)


# --- DOT export --------------------------------------------------------------------


def test_dot_l7(L7):
    dot = to_dot(L7)
    assert dot.startswith("digraph lattice {")
    assert dot.count("->") == 9
    assert 'rankdir=BT' in dot
    # skeleton members are drawn as boxes
    for boxed in ("0", "a", "b", "1"):
        assert f'"{boxed}" [shape=box];' in dot
    for plain in ("u", "v", "w"):
        assert f'"{plain}";' in dot


def test_dot_bare_lattice_has_no_boxes():
    lat = build_lattice(parse("elements: 0 1\ncover: 0 1\n"))
    dot = to_dot(lat)
    assert "shape=box" not in dot
    assert '"0" -> "1";' in dot


# --- property style -----------------------------------------------------------------


@given(strategies.sampled_from(corpus()))
def test_serialize_is_canonical(pair):
    name, D = pair
    text = serialize(spec_of(D))
    assert serialize(normalize(parse(text))) == text
    assert text.endswith("\n")
