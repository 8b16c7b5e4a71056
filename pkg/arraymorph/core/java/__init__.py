"""
Token-level reading of Java sources: the declaration manifest, usages of
the predefined classes and statement counts. Nothing here builds a syntax
tree.
"""

from arraymorph.core.java.declarations import (
    ArrayDecl,
    ParseIssue,
    Severity,
    format_decl,
    format_infile,
    parse_infile,
)
from arraymorph.core.java.statements import count_statements, count_statements_with_issues
from arraymorph.core.java.usages import scan_class_usages

__all__ = [
    "ArrayDecl",
    "ParseIssue",
    "Severity",
    "count_statements",
    "count_statements_with_issues",
    "format_decl",
    "format_infile",
    "parse_infile",
    "scan_class_usages",
]
