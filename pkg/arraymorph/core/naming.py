import re
from typing import Optional

from arraymorph.core.kinds import ElementKind, RestructureOp

_CLASS_NAME = re.compile(r"^(?P<prefix>[A-Z][a-z]+)Array_(?P<suffix>[A-Za-z]+)$")


def class_name(op: RestructureOp, kind: ElementKind) -> str:
    """Name of the generated class, e.g. ``SplitArray_Integer``."""
    return f"{op.class_prefix}Array_{kind.class_suffix}"


def parse_class_name(name: str) -> Optional[tuple[RestructureOp, ElementKind]]:
    """(op, kind) of a predefined class name, None for any other name."""
    match = _CLASS_NAME.match(name)
    if match is None:
        return None
    try:
        return (
            RestructureOp.from_class_prefix(match.group("prefix")),
            ElementKind.from_class_suffix(match.group("suffix")),
        )
    except ValueError:
        return None


# All twelve predefined classes, grouped by operation
PREDEFINED_CLASSES: tuple[str, ...] = tuple(
    class_name(op, kind) for op in RestructureOp for kind in ElementKind
)
