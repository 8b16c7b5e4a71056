import logging
from pathlib import Path

import pytest

from arraymorph.core.java import (
    ArrayDecl,
    Severity,
    count_statements,
    count_statements_with_issues,
    format_decl,
    format_infile,
    parse_infile,
    scan_class_usages,
)
from arraymorph.core.java.lexer import TokenKind, strip_comments, tokenize
from arraymorph.core.kinds import ElementKind
from arraymorph.core.logger import get_logger, log_issues, set_level

FIXTURES = Path(__file__).parent.parent / "fixtures"


def fixture(name: str) -> str:
    return (FIXTURES / name).read_text(encoding="utf-8")


class TestLexer:
    def test_literals_collapsed(self):
        tokens = list(tokenize('s = "SplitArray_Char"; c = \'x\';'))
        kinds = [t.kind for t in tokens]
        assert TokenKind.STRING in kinds and TokenKind.CHAR in kinds
        assert all("SplitArray" not in t.text for t in tokens)

    def test_line_numbers(self):
        tokens = list(tokenize("a\n/* one\ntwo */ b\nc"))
        assert [(t.text, t.line) for t in tokens] == [("a", 1), ("b", 3), ("c", 4)]

    def test_strip_comments_keeps_lines(self):
        assert strip_comments("a; // x\n/* y\n z */b;") == "a; \n\nb;"


class TestParseInfile:
    def test_manifest(self):
        decls, issues = parse_infile(fixture("infile.txt"))
        assert decls == [
            ArrayDecl("array", ElementKind.INTEGER, (100000,)),
            ArrayDecl("a", ElementKind.INTEGER, (23,)),
            ArrayDecl("ab", ElementKind.DOUBLE, (45,)),
            ArrayDecl("abc", ElementKind.TEXT, (34,)),
            ArrayDecl("abcd", ElementKind.CHAR, (100,)),
        ]
        assert len(issues) == 1
        assert issues[0].line_number == 3
        assert issues[0].severity is Severity.WARNING

    def test_two_dimensional(self):
        decls, issues = parse_infile("int[][] grid=new int[500][200];")
        assert decls == [ArrayDecl("grid", ElementKind.INTEGER, (500, 200))]
        assert decls[0].dimensions == 2
        assert issues == []

    @pytest.mark.parametrize(
        "line,message",
        [
            ("long[] x=new long[4];", "unsupported element type"),
            ("int[] x=new double[4];", "does not match"),
            ("int[] for=new int[4];", "reserved word"),
            ("int[][][] x=new int[2][2][2];", "at most 2 dimensions"),
            ("int[] x=new int[0];", "must be positive"),
            ("int[] x=new int[2][3];", "declared with 1 dimension"),
            ("int[] x;", "malformed"),
        ],
    )
    def test_errors(self, line, message):
        decls, issues = parse_infile(f"int[] ok=new int[1];\n{line}\n")
        assert [d.name for d in decls] == ["ok"]
        assert len(issues) == 1
        assert issues[0].severity is Severity.ERROR
        assert issues[0].line_number == 2
        assert message in issues[0].message

    def test_comments_and_blank_lines(self):
        decls, issues = parse_infile("// arrays\n\nint[] a=new int[3]; /* trailing */\n")
        assert decls == [ArrayDecl("a", ElementKind.INTEGER, (3,))]
        assert decls[0].line_number == 3
        assert issues == []

    def test_empty(self):
        assert parse_infile("") == ([], [])

    def test_format_round_trip(self):
        decls, _ = parse_infile(fixture("infile.txt"))
        assert format_decl(decls[2]) == "double[] ab=new double[45];"
        assert parse_infile(format_infile(decls)) == (decls, [])


class TestClassUsages:
    def test_split_driver(self):
        assert scan_class_usages(fixture("test_split.java")) == {
            "SplitArray_Integer",
            "SplitArray_Double",
            "SplitArray_String",
            "SplitArray_Char",
        }

    def test_comment_mentions_ignored(self):
        assert scan_class_usages(fixture("search_flatten.java")) == {"FlattenedArray_Integer"}

    def test_string_mentions_ignored(self):
        assert scan_class_usages(fixture("no_usages.java")) == set()

    def test_similar_names_ignored(self):
        assert scan_class_usages("SplitArray_Integers x; MySplitArray_Char y;") == set()


class TestStatementCount:
    def test_stub(self):
        assert count_statements(fixture("SplitArray_Integer.stub.java")) == 7

    def test_full_split_class(self):
        assert count_statements(fixture("SplitArray_Integer.full.java")) == 23

    def test_simple_method(self):
        source = "class A { int x; void f() { x = 1; if (x > 0) x++; for (int i=0;i<3;i++) {} } }"
        # class, field, signature, assignment, if, x++, for
        assert count_statements(source) == 7

    def test_array_initializer_is_one_statement(self):
        assert count_statements("class A { int[][] t={{1,2},{3,4}}; }") == 2

    def test_comments_and_strings_ignored(self):
        assert count_statements('class A { String s = "a; b; c"; // d;\n }') == 2

    def test_unbalanced_braces_reported(self):
        count, issues = count_statements_with_issues("class A { void f() { x = 1; }")
        assert count == 3
        assert len(issues) == 1
        assert issues[0].severity is Severity.WARNING
        _, issues = count_statements_with_issues("x = 1; }")
        assert "unmatched" in issues[0].message

    def test_empty(self):
        assert count_statements("") == 0


class TestLogIssues:
    def test_levels_follow_severity(self, caplog):
        _, issues = parse_infile("int[] x;\ndouble ab=new double[4];\n")
        with caplog.at_level(logging.WARNING, logger="arraymorph"):
            log_issues(get_logger("arraymorph.tests"), issues, "infile.txt")
        records = [r for r in caplog.records if r.name == "arraymorph.tests"]
        assert [r.levelname for r in records] == ["ERROR", "WARNING"]
        assert records[0].getMessage().startswith("infile.txt: line 1: error:")

    def test_set_level_reaches_module_loggers(self):
        set_level("info")
        try:
            assert get_logger("arraymorph.core.java").getEffectiveLevel() == logging.INFO
        finally:
            set_level("warning")
