"""
Statement counting for LOC-based metrics.

Counted, after comments and literal contents are dropped:
    - each class/interface/enum header
    - each field declaration and each method or constructor signature
    - each ';'-terminated statement inside a body (for-header semicolons excluded)
    - each if/else/for/while/try/catch header

The rule is calibrated so the four-member stub class counts 7.
"""

from enum import Enum

from arraymorph.core.java.declarations import ParseIssue, Severity
from arraymorph.core.java.lexer import TokenKind, tokenize

TYPE_KEYWORDS = frozenset(["class", "interface", "enum"])
CONTROL_KEYWORDS = frozenset(["if", "else", "for", "while", "try", "catch"])


class _Scope(Enum):
    MEMBERS = "members"  # class body, or top level
    BODY = "body"  # method, constructor or block body
    INIT = "init"  # array initializer


def count_statements_with_issues(source_text: str) -> tuple[int, list[ParseIssue]]:
    """
    Count statements, reporting unbalanced braces as warnings.

    Returns:
        (statement count, issues)
    """
    count = 0
    issues: list[ParseIssue] = []
    stack = [_Scope.MEMBERS]
    pending_type = False
    # Tokens and parens seen since the last statement/member boundary
    pending_tokens = 0
    has_paren = False
    paren_depth = 0
    prev = None
    last_line = 1

    for token in tokenize(source_text):
        text, scope, last_line = token.text, stack[-1], token.line
        is_word = token.kind is TokenKind.IDENT and prev != "."

        if is_word and text in TYPE_KEYWORDS and scope is not _Scope.INIT:
            count += 1
            pending_type = True
        elif is_word and text in CONTROL_KEYWORDS and scope is _Scope.BODY:
            count += 1

        if text == "(":
            paren_depth += 1
            has_paren = True
        elif text == ")":
            paren_depth = max(0, paren_depth - 1)
        elif text == "{" and token.kind is TokenKind.PUNCT:
            if pending_type:
                stack.append(_Scope.MEMBERS)
            elif scope is _Scope.INIT or prev in ("=", "]"):
                stack.append(_Scope.INIT)
                prev = text
                continue
            else:
                if scope is _Scope.MEMBERS and has_paren:
                    count += 1
                stack.append(_Scope.BODY)
            pending_type, pending_tokens, has_paren = False, 0, False
            prev = text
            continue
        elif text == "}" and token.kind is TokenKind.PUNCT:
            if len(stack) == 1:
                issues.append(
                    ParseIssue(token.line, "unmatched closing brace", Severity.WARNING)
                )
            elif stack.pop() is not _Scope.INIT:
                pending_tokens, has_paren = 0, False
                paren_depth = 0
            prev = text
            continue
        elif text == ";" and paren_depth == 0 and scope is not _Scope.INIT:
            if pending_tokens > 0:
                count += 1
            pending_tokens, has_paren = 0, False
            prev = text
            continue

        pending_tokens += 1
        prev = text

    if len(stack) > 1:
        issues.append(
            ParseIssue(
                last_line, f"{len(stack) - 1} unclosed brace(s) at end of input", Severity.WARNING
            )
        )
    return count, issues


def count_statements(source_text: str) -> int:
    """Statement count of ``source_text`` (see module docstring for the rule)."""
    return count_statements_with_issues(source_text)[0]
