"""
Reader for the array declaration manifest ("InFile").

One declaration per line, e.g. ``int[] a=new int[23];``. Problems never
abort the parse: each bad line is reported as a ``ParseIssue`` and skipped.
"""

import re
from dataclasses import dataclass, field
from enum import Enum

from arraymorph.core.java.lexer import JAVA_KEYWORDS, strip_comments
from arraymorph.core.kinds import ElementKind
from arraymorph.core.logger import get_logger

logger = get_logger(__name__)

MAX_DIMENSIONS = 2

_DECL = re.compile(
    r"^(?P<type>\w+)\s*(?P<pre>(?:\[\s*\]\s*)*)"
    r"(?P<name>[A-Za-z_$][\w$]*)\s*(?P<post>(?:\[\s*\]\s*)*)"
    r"=\s*new\s+(?P<new_type>\w+)\s*(?P<extents>(?:\[\s*\d+\s*\]\s*)+);$"
)


class Severity(Enum):
    ERROR = "error"
    WARNING = "warning"


@dataclass(frozen=True)
class ParseIssue:
    line_number: int
    message: str
    severity: Severity

    def __str__(self) -> str:
        return f"line {self.line_number}: {self.severity.value}: {self.message}"


@dataclass(frozen=True)
class ArrayDecl:
    """
    One declared array of the manifest.

    Attributes:
        name: Java identifier of the array
        kind: Element kind
        extents: One size for a 1D array, (rows, cols) for a 2D array
        line_number: Manifest line the declaration came from (not part of equality)
    """

    name: str
    kind: ElementKind
    extents: tuple[int, ...]
    line_number: int = field(default=1, compare=False)

    @property
    def dimensions(self) -> int:
        return len(self.extents)


def _parse_line(text: str, line_number: int) -> tuple[list[ArrayDecl], list[ParseIssue]]:
    def error(message: str) -> tuple[list[ArrayDecl], list[ParseIssue]]:
        return [], [ParseIssue(line_number, message, Severity.ERROR)]

    match = _DECL.match(text)
    if match is None:
        return error(f"malformed declaration: {text}")

    java_type, new_type = match.group("type"), match.group("new_type")
    try:
        kind = ElementKind.from_java_type(java_type)
    except ValueError:
        return error(f"unsupported element type '{java_type}'")
    if new_type != java_type:
        return error(f"declared type '{java_type}' does not match 'new {new_type}'")

    name = match.group("name")
    if name in JAVA_KEYWORDS:
        return error(f"'{name}' is a reserved word")

    extents = tuple(int(e) for e in re.findall(r"\d+", match.group("extents")))
    if len(extents) > MAX_DIMENSIONS:
        return error(f"at most {MAX_DIMENSIONS} dimensions are supported, got {len(extents)}")
    if any(e < 1 for e in extents):
        return error(f"array extents must be positive, got {list(extents)}")

    issues = []
    declared = (match.group("pre") + match.group("post")).count("[")
    if declared == 0:
        issues.append(
            ParseIssue(
                line_number,
                f"'{java_type} {name}' has no [] on the declared type; read as a {len(extents)}D array",
                Severity.WARNING,
            )
        )
    elif declared != len(extents):
        return error(
            f"'{name}' is declared with {declared} dimension(s) but allocated with {len(extents)}"
        )

    return [ArrayDecl(name, kind, extents, line_number)], issues


def parse_infile(text: str) -> tuple[list[ArrayDecl], list[ParseIssue]]:
    """
    Parse a declaration manifest.

    Accepts ``Type[] name``, ``Type name[]`` and a bracket-less declared type
    (with a warning); allocations take one or two extents.

    Args:
        text: Manifest contents

    Returns:
        (declarations in file order, issues in file order)
    """
    decls: list[ArrayDecl] = []
    issues: list[ParseIssue] = []
    for line_number, raw in enumerate(strip_comments(text).splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        line_decls, line_issues = _parse_line(line, line_number)
        decls.extend(line_decls)
        issues.extend(line_issues)

    for issue in issues:
        logger.debug(f"Manifest {issue}")
    return decls, issues


def format_decl(decl: ArrayDecl) -> str:
    """Canonical manifest line for ``decl``."""
    java_type = decl.kind.java_type
    brackets = "[]" * decl.dimensions
    sizes = "".join(f"[{e}]" for e in decl.extents)
    return f"{java_type}{brackets} {decl.name}=new {java_type}{sizes};"


def format_infile(decls: list[ArrayDecl]) -> str:
    return "".join(f"{format_decl(d)}\n" for d in decls)
