from arraymorph.core.java.lexer import identifiers
from arraymorph.core.naming import PREDEFINED_CLASSES

_PREDEFINED = frozenset(PREDEFINED_CLASSES)


def scan_class_usages(source_text: str) -> set[str]:
    """
    Predefined class names a Java source refers to.

    Only whole identifiers count; mentions inside comments and string
    literals are ignored.
    """
    return {name for name in identifiers(source_text) if name in _PREDEFINED}
