"""
Token-level scanner for the Java subset the tool reads.

No parsing happens here: comments are dropped, string and char literals are
collapsed to empty placeholders, and everything else comes out as
identifiers, numbers or single punctuation characters. Malformed input never
raises; stray quotes simply come out as punctuation.
"""

import re
from enum import Enum
from typing import Iterator, NamedTuple


class TokenKind(Enum):
    IDENT = "ident"
    NUMBER = "number"
    STRING = "string"
    CHAR = "char"
    PUNCT = "punct"


class Token(NamedTuple):
    kind: TokenKind
    text: str
    line: int


JAVA_KEYWORDS = frozenset(
    [
        "abstract", "assert", "boolean", "break", "byte", "case", "catch",
        "char", "class", "const", "continue", "default", "do", "double",
        "else", "enum", "extends", "final", "finally", "float", "for", "goto",
        "if", "implements", "import", "instanceof", "int", "interface", "long",
        "native", "new", "package", "private", "protected", "public", "return",
        "short", "static", "strictfp", "super", "switch", "synchronized",
        "this", "throw", "throws", "transient", "try", "void", "volatile",
        "while", "true", "false", "null",
    ]
)

_RULES = [
    ("comment", r"/\*.*?(?:\*/|\Z)"),
    ("comment", r"//[^\n]*"),
    ("string", r'"(?:\\.|[^"\\\n])*"'),
    ("char", r"'(?:\\.|[^'\\\n])+'"),
    ("number", r"\d[\w.]*"),
    ("ident", r"[A-Za-z_$][\w$]*"),
    ("space", r"\s+"),
    ("punct", r"\S"),
]
_MASTER = re.compile(
    "|".join(f"(?P<{name}{i}>{pattern})" for i, (name, pattern) in enumerate(_RULES)),
    re.DOTALL,
)

_PLACEHOLDERS = {TokenKind.STRING: '""', TokenKind.CHAR: "''"}


def tokenize(text: str) -> Iterator[Token]:
    """
    Yield the significant tokens of ``text`` with their 1-based line numbers.

    String and char literal contents are replaced by empty placeholders so
    nothing inside a literal is ever mistaken for code.
    """
    line = 1
    for match in _MASTER.finditer(text):
        group = match.lastgroup.rstrip("0123456789")
        lexeme = match.group()
        if group not in ("comment", "space"):
            kind = TokenKind(group)
            yield Token(kind, _PLACEHOLDERS.get(kind, lexeme), line)
        line += lexeme.count("\n")


def identifiers(text: str) -> Iterator[str]:
    """Identifiers of ``text`` outside comments and literals."""
    for token in tokenize(text):
        if token.kind is TokenKind.IDENT:
            yield token.text


def strip_comments(text: str) -> str:
    """``text`` with comments removed; line structure is preserved."""

    def _blank(match: re.Match) -> str:
        group = match.lastgroup.rstrip("0123456789")
        if group == "comment":
            return "\n" * match.group().count("\n")
        return match.group()

    return _MASTER.sub(_blank, text)
