"""Exceptions raised by the workbench."""


class WorkbenchError(Exception):
    """Base class for all workbench errors."""


class UnsupportedOrder(WorkbenchError, ValueError):
    """Field order outside the supported set."""


class DivisionByZero(WorkbenchError, ZeroDivisionError):
    """Inverse of the zero element requested."""


class FieldAxiomViolation(WorkbenchError):
    """Arithmetic tables failed the exhaustive field-axiom check."""


class InvalidArgs(WorkbenchError, ValueError):
    """Arguments outside an operation's precondition."""


class RankDeficient(InvalidArgs):
    """Generator rows are linearly dependent."""


class EntryOutOfRange(InvalidArgs):
    """Matrix entry not in [0, q)."""


class IndexOutOfRange(InvalidArgs):
    """Coordinate outside [1, n]."""


class EmptySet(InvalidArgs):
    """Operation needs a nonempty coordinate set."""


class FullEntropyShorten(InvalidArgs):
    """Shortening on a set of full entropy leaves a zero-dimensional code."""


class EnumerationCapExceeded(WorkbenchError):
    """Codeword enumeration would exceed the configured cap."""


class SearchCapExceeded(WorkbenchError):
    """Exact permutation search would exceed the configured cap."""


class MaterializationCapExceeded(WorkbenchError):
    """Flat lattice too large to materialize."""


class LocalityParseError(InvalidArgs):
    """Malformed locality string.

    Attributes:
        position: 0-based character offset of the offending token
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class MatrixFormatError(InvalidArgs):
    """Malformed matrix text.

    Attributes:
        line: 1-based line number of the offending line
    """

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class UnclassifiedHyperplane(WorkbenchError):
    """A hyperplane restriction matched no admissible restriction type."""


class TypeNotRealizable(WorkbenchError):
    """No closed set of the requested restriction type contains the symbol."""


class InvalidFamilies(InvalidArgs):
    """Repair-set families violate the hierarchical locality requirements."""


class InfeasiblePadding(WorkbenchError):
    """No padding set reaches the requested entropy."""
