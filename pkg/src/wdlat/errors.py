"""Exception types raised by the library.

Everything derives from LatticeError so callers can catch one base class.
Parse-level problems derive from FormatError and carry a line number
where that makes sense.
"""


class LatticeError(Exception):
    """Base class for all errors raised by this package."""


class NotAPoset(LatticeError):
    """The input relation is not a partial order (cycle or broken closure)."""


class NotALattice(LatticeError):
    """Some pair of elements has no unique meet or join."""

    def __init__(self, message: str, pair: tuple[str, str] | None = None):
        super().__init__(message)
        self.pair = pair


class NotBounded(LatticeError):
    """The poset has no unique bottom or no unique top."""


class UnknownElement(LatticeError):
    """An element name does not belong to the carrier."""


class SizeCapExceeded(LatticeError):
    """An instance exceeds the size cap of the requested construction."""


class AxiomViolation(LatticeError):
    """A unary table breaks one of the defining axioms.

    law_id names the broken axiom; witness holds the element names at
    which the first violation was found, in scan order.
    """

    def __init__(self, law_id: str, witness: tuple[str, ...], message: str = ""):
        super().__init__(message or f"{law_id} violated at {witness}")
        self.law_id = law_id
        self.witness = witness


class MissingUnary(LatticeError):
    """An operation needs a unary table the instance does not carry."""


class NotBoolean(LatticeError):
    """The lattice is not Boolean (witness element lacks a complement)."""

    def __init__(self, message: str, witness: str | None = None):
        super().__init__(message)
        self.witness = witness


class OrtholawViolation(LatticeError):
    """A skeleton algebra fails one of the complementation laws."""


class EmptyGenerator(LatticeError):
    """A generated filter was requested from the empty set."""


class NotASkeletonFilter(LatticeError):
    """The given set is not a filter of the skeleton algebra."""


class NotInSkeleton(LatticeError):
    """An argument must lie inside the skeleton but does not."""


class BaseMismatch(LatticeError):
    """Two arguments live over different base lattices."""


class UniverseMismatch(LatticeError):
    """A classification was requested against the wrong universe."""


class MalformedPartition(LatticeError):
    """Blocks do not partition the carrier."""


class NotDistributive(LatticeError):
    """The operation needs a distributive base lattice."""


class NotSFilter(LatticeError):
    """The operation needs a filter closed under the interior meet."""


class NotProper(LatticeError):
    """The operation needs a proper filter."""


class NotACongruence(LatticeError):
    """A derived partition fails compatibility with the operations."""

    def __init__(self, message: str, witness: tuple[str, ...] | None = None):
        super().__init__(message)
        self.witness = witness


class FormatError(LatticeError):
    """Base class for problems in the lattice text format."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ParseError(FormatError):
    """A line of the text format cannot be read."""


class DuplicateDeclaration(FormatError):
    """The same declaration appears twice."""


class UnknownElementInCover(FormatError):
    """A cover line mentions an undeclared element."""


class UnknownBuiltin(LatticeError):
    """No built-in instance has the requested name."""
