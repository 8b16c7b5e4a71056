from enum import Enum
from typing import Union

Value = Union[int, float, str]


class ElementKind(Enum):
    """
    Element types the generated classes are specialised for.

    Declaration order is the order classes are planned and listed in.
    Each member carries the Java spelling of its type, the suffix used in
    class names, the letter prefixing backing field names and the default
    an unwritten cell reads as.
    """

    INTEGER = ("int", "Integer", "i", "0", 0)
    DOUBLE = ("double", "Double", "d", "0.0", 0.0)
    TEXT = ("String", "String", "s", '""', "")
    CHAR = ("char", "Char", "c", "'\\0'", "\x00")

    def __init__(
        self,
        java_type: str,
        class_suffix: str,
        field_prefix: str,
        default_literal: str,
        default: Value,
    ):
        self.java_type = java_type
        self.class_suffix = class_suffix
        self.field_prefix = field_prefix
        self.default_literal = default_literal
        self.default = default

    @classmethod
    def from_java_type(cls, name: str) -> "ElementKind":
        for kind in cls:
            if kind.java_type == name:
                return kind
        raise ValueError(
            f"Unknown Java element type: {name}. Available types: {[k.java_type for k in cls]}"
        )

    @classmethod
    def from_class_suffix(cls, suffix: str) -> "ElementKind":
        for kind in cls:
            if kind.class_suffix == suffix:
                return kind
        raise ValueError(f"Unknown class suffix: {suffix}")


class RestructureOp(Enum):
    """Array restructuring operations the tool generates classes for."""

    SPLIT = ("split", "Split", 1)
    FOLDED = ("fold", "Folded", 1)
    FLATTENED = ("flatten", "Flattened", 2)

    def __init__(self, cli_name: str, class_prefix: str, arity: int):
        self.cli_name = cli_name
        self.class_prefix = class_prefix
        # Number of coordinates (and constructor extents) the class takes
        self.arity = arity

    @classmethod
    def from_cli_name(cls, name: str) -> "RestructureOp":
        for op in cls:
            if op.cli_name == name:
                return op
        raise ValueError(
            f"Unknown operation: {name}. Available operations: {[op.cli_name for op in cls]}"
        )

    @classmethod
    def from_class_prefix(cls, prefix: str) -> "RestructureOp":
        for op in cls:
            if op.class_prefix == prefix:
                return op
        raise ValueError(f"Unknown class prefix: {prefix}")
