"""
Exceptions raised by arraymorph.

Every error the tool raises on bad input derives from ``ArrayMorphError`` and
also from the matching builtin, so callers that only know ``IndexError`` or
``ValueError`` keep working.
"""


class ArrayMorphError(Exception):
    """Base class for all arraymorph errors."""


class IndexOutOfRangeError(ArrayMorphError, IndexError):
    """A coordinate falls outside the array it addresses."""


class InvalidExtentError(ArrayMorphError, ValueError):
    """An array size is zero, negative, or given with the wrong arity."""


class InvalidMapError(ArrayMorphError, ValueError):
    """An affine index map is not a permutation of its range."""


class KindMismatchError(ArrayMorphError, TypeError):
    """A value does not fit the element kind of a store."""


class HidingRangeError(ArrayMorphError, ValueError):
    """A constant or chain depth the F helper cannot express."""


class WorkspaceError(ArrayMorphError, OSError):
    """A file or directory the tool needs cannot be read or written."""


class MetricsInputError(ArrayMorphError, ValueError):
    """Metric inputs that make a ratio undefined."""


class InvariantViolation(ArrayMorphError):
    """A verification suite found a counterexample."""

    def __init__(self, suite: str, counterexample: str):
        super().__init__(f"{suite}: {counterexample}")
        self.suite = suite
        self.counterexample = counterexample


class EmptyInputError(ArrayMorphError, ValueError):
    """An input that parses but leaves the command nothing to act on."""
