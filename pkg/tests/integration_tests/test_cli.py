import os
from pathlib import Path

import pytest

from arraymorph.cli.main import run
from arraymorph.core.codegen import PREDEFINED_CLASSES, emit_full, emit_stub, workspace
from arraymorph.core.constants import EXIT_INPUT_ERROR, EXIT_INVARIANT_VIOLATION, EXIT_OK
from arraymorph.core.hiding import hiding_helper
from arraymorph.core.java import count_statements
from arraymorph.core.kinds import ElementKind, RestructureOp
from arraymorph.core.layout import maps
from arraymorph.core.layout.maps import Half, SplitLocation
from arraymorph.core.metrics import MetricsInput, build_report

FIXTURES = Path(__file__).parent.parent / "fixtures"
ORIG = FIXTURES / "search_orig.java"
FLATTEN = FIXTURES / "search_flatten.java"
SPLIT_DRIVER = FIXTURES / "search_split.java"
FOLD_DRIVER = FIXTURES / "search_fold.java"

SPLIT_CLASSES = {
    "SplitArray_Integer.java",
    "SplitArray_Double.java",
    "SplitArray_String.java",
    "SplitArray_Char.java",
}


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for name in (
        "ARRAYMORPH_SEED",
        "ARRAYMORPH_HIDE",
        "ARRAYMORPH_INDEX_OBFUSCATE",
        "ARRAYMORPH_LOG_LEVEL",
        "ARRAYMORPH_CONFIG",
        "ARRAYMORPH_JOBS",
    ):
        monkeypatch.delenv(name, raising=False)


def java_files(directory: Path) -> set[str]:
    return {p.name for p in directory.iterdir()}


def output_lines(capsys) -> dict[str, str]:
    out = capsys.readouterr().out
    return dict(line.split("=", 1) for line in out.splitlines())


class TestGenerate:
    def test_manifest_split(self, tmp_path, capsys):
        out = tmp_path / "classes"
        code = run(["generate", "--infile", str(FIXTURES / "infile.txt"), "--op", "split", "--out", str(out)])
        assert code == EXIT_OK
        assert java_files(out) == SPLIT_CLASSES
        assert (out / "SplitArray_Integer.java").read_text() == (
            FIXTURES / "SplitArray_Integer.full.java"
        ).read_text()
        assert "Generated 4 Split class(es)" in capsys.readouterr().out

    def test_flatten_keeps_two_dimensional_declarations(self, tmp_path):
        infile = tmp_path / "infile.txt"
        infile.write_text("int[][] grid=new int[500][200];\nchar[] c=new char[3];\n")
        code = run(["generate", "--infile", str(infile), "--op", "flatten", "--out", str(tmp_path / "out")])
        assert code == EXIT_OK
        assert java_files(tmp_path / "out") == {"FlattenedArray_Integer.java"}

    def test_hidden_classes(self, tmp_path):
        out = tmp_path / "out"
        code = run(
            ["generate", "--infile", str(FIXTURES / "infile.txt"), "--op", "fold", "--out", str(out), "--hide", "--seed", "4"]
        )
        assert code == EXIT_OK
        text = (out / "FoldedArray_Double.java").read_text()
        assert hiding_helper().source_text in text
        assert "F(" in text

    def test_empty_manifest(self, tmp_path, capsys):
        infile = tmp_path / "infile.txt"
        infile.write_text("// nothing declared\n\n")
        code = run(["generate", "--infile", str(infile), "--op", "split", "--out", str(tmp_path / "out")])
        assert code == EXIT_INPUT_ERROR
        assert "no array declarations" in capsys.readouterr().err

    def test_no_declaration_fits_the_op(self, tmp_path):
        infile = tmp_path / "infile.txt"
        infile.write_text("int[] a=new int[4];\n")
        code = run(["generate", "--infile", str(infile), "--op", "flatten", "--out", str(tmp_path / "out")])
        assert code == EXIT_INPUT_ERROR

    def test_missing_infile(self, tmp_path):
        code = run(["generate", "--infile", str(tmp_path / "absent.txt"), "--op", "split", "--out", str(tmp_path)])
        assert code == EXIT_INPUT_ERROR

    def test_missing_flag_is_an_input_error(self):
        with pytest.raises(SystemExit) as excinfo:
            run(["generate", "--op", "split"])
        assert excinfo.value.code == EXIT_INPUT_ERROR

    def test_unknown_op(self, tmp_path):
        with pytest.raises(SystemExit) as excinfo:
            run(["generate", "--infile", "x", "--op", "merge", "--out", str(tmp_path)])
        assert excinfo.value.code == EXIT_INPUT_ERROR


class TestStubs:
    def test_writes_all_predefined(self, tmp_path):
        out = tmp_path / "stubs"
        assert run(["stubs", "--out", str(out)]) == EXIT_OK
        assert java_files(out) == {f"{name}.java" for name in PREDEFINED_CLASSES}
        assert (out / "SplitArray_Integer.java").read_text() == (
            FIXTURES / "SplitArray_Integer.stub.java"
        ).read_text()

    def test_rerun_is_byte_identical(self, tmp_path):
        out = tmp_path / "stubs"
        run(["stubs", "--out", str(out)])
        first = {p.name: p.read_bytes() for p in out.iterdir()}
        run(["stubs", "--out", str(out)])
        assert {p.name: p.read_bytes() for p in out.iterdir()} == first

    def test_output_path_is_a_file(self, tmp_path, capsys):
        target = tmp_path / "taken"
        target.write_text("")
        assert run(["stubs", "--out", str(target)]) == EXIT_INPUT_ERROR
        assert capsys.readouterr().err.startswith("error: ")

    @pytest.mark.skipif(os.geteuid() == 0, reason="root ignores directory permissions")
    def test_read_only_directory(self, tmp_path, capsys):
        out = tmp_path / "locked"
        out.mkdir()
        out.chmod(0o500)
        try:
            assert run(["stubs", "--out", str(out)]) == EXIT_INPUT_ERROR
            assert capsys.readouterr().err.startswith("error: ")
            assert java_files(out) == set()
        finally:
            out.chmod(0o700)

    def test_unwritable_directory(self, tmp_path, monkeypatch, capsys):
        def refuse(*args, **kwargs):
            raise PermissionError(13, "Permission denied", kwargs.get("dir"))

        monkeypatch.setattr(workspace.tempfile, "mkstemp", refuse)
        assert run(["stubs", "--out", str(tmp_path)]) == EXIT_INPUT_ERROR
        assert "Permission denied" in capsys.readouterr().err
        assert java_files(tmp_path) == set()


class TestRewrite:
    def setup_method(self):
        self.split = RestructureOp.SPLIT

    def test_rewrites_used_classes(self, tmp_path):
        run(["stubs", "--out", str(tmp_path)])
        code = run(["rewrite", "--source", str(FIXTURES / "test_split.java"), "--class-dir", str(tmp_path)])
        assert code == EXIT_OK
        for kind in ElementKind:
            generated = emit_full(self.split, kind)
            assert (tmp_path / generated.file_name).read_text() == generated.source_text
        folded = emit_stub(RestructureOp.FOLDED, ElementKind.INTEGER)
        assert (tmp_path / folded.file_name).read_text() == folded.source_text

    def test_comment_mentions_are_not_usages(self, tmp_path):
        code = run(["rewrite", "--source", str(FLATTEN), "--class-dir", str(tmp_path)])
        assert code == EXIT_OK
        assert java_files(tmp_path) == {"FlattenedArray_Integer.java"}

    def test_split_driver(self, tmp_path):
        assert run(["rewrite", "--source", str(SPLIT_DRIVER), "--class-dir", str(tmp_path)]) == EXIT_OK
        assert java_files(tmp_path) == {"SplitArray_Integer.java"}

    def test_fold_driver(self, tmp_path):
        assert run(["rewrite", "--source", str(FOLD_DRIVER), "--class-dir", str(tmp_path)]) == EXIT_OK
        assert java_files(tmp_path) == {"FoldedArray_Integer.java"}
        generated = emit_full(RestructureOp.FOLDED, ElementKind.INTEGER)
        assert (tmp_path / generated.file_name).read_text() == generated.source_text

    def test_nothing_to_rewrite(self, tmp_path, capsys):
        code = run(["rewrite", "--source", str(FIXTURES / "no_usages.java"), "--class-dir", str(tmp_path / "out")])
        assert code == EXIT_OK
        assert "nothing to rewrite" in capsys.readouterr().out
        assert not (tmp_path / "out").exists()


class TestMetrics:
    def metrics(self, *extra: str) -> int:
        return run(["metrics", "--orig", str(ORIG), "--obf", str(FLATTEN), *extra])

    def test_split_row(self, capsys):
        code = self.metrics(
            "--loc-orig", "22", "--loc-obf", "296", "--size-orig", "704", "--size-obf", "1135",
            "--t-orig", "5", "--t-obf", "6",
        )
        assert code == EXIT_OK
        lines = output_lines(capsys)
        assert lines["s_loc_display"] == "12.45"
        assert lines["s_pot_display"] == "155.63"
        assert lines["s_storage_display"] == "0.61"
        assert lines["s_runtime_display"] == "0.20"
        assert lines["s_cst_display"] == "0.182"
        assert lines["s_quality_display"] == "62.07"
        assert lines["runtime_measured"] == "true"

    def test_fold_and_flatten_rows(self, capsys):
        self.metrics("--loc-orig", "22", "--loc-obf", "164", "--size-orig", "704", "--size-obf", "1136", "--t-orig", "7", "--t-obf", "7")
        assert output_lines(capsys)["s_quality_display"] == "32.16"
        self.metrics("--loc-orig", "22", "--loc-obf", "117", "--size-orig", "704", "--size-obf", "1223")
        lines = output_lines(capsys)
        assert lines["s_storage_display"] == "0.74"
        assert lines["s_cst_display"] == "0.111"
        assert lines["s_quality_display"] == "21.49"
        assert lines["runtime_measured"] == "false"

    def test_identical_programs(self, capsys):
        assert run(["metrics", "--orig", str(ORIG), "--obf", str(ORIG)]) == EXIT_OK
        lines = output_lines(capsys)
        assert lines["s_quality"] == "0"
        assert lines["s_quality_display"] == "0.00"
        assert lines["runtime_measured"] == "false"

    def test_composite_loc_from_files(self, tmp_path, capsys):
        infile = tmp_path / "infile.txt"
        infile.write_text("int[][] grid=new int[3][4];\n")
        out = tmp_path / "out"
        run(["generate", "--infile", str(infile), "--op", "flatten", "--out", str(out), "--hide"])
        capsys.readouterr()
        class_file = out / "FlattenedArray_Integer.java"

        assert self.metrics("--class", str(class_file)) == EXIT_OK
        obf_stmts = count_statements(FLATTEN.read_text())
        expected = build_report(
            MetricsInput.from_components(
                loc_orig=count_statements(ORIG.read_text()),
                source_stmts=obf_stmts,
                class_stmts=20,
                distinct_call_count=3,
                stmts_per_call=hiding_helper().statement_count,
                size_orig=ORIG.stat().st_size,
                size_obf=FLATTEN.stat().st_size,
            )
        )
        assert capsys.readouterr().out == expected.render()

    def test_one_runtime_only(self, capsys):
        assert self.metrics("--t-orig", "5") == EXIT_INPUT_ERROR
        assert "both runtimes" in capsys.readouterr().err

    def test_missing_file(self, tmp_path):
        assert run(["metrics", "--orig", str(tmp_path / "a.java"), "--obf", str(FLATTEN)]) == EXIT_INPUT_ERROR


class TestHide:
    def test_given_base(self, capsys):
        assert run(["hide", "--value", "2", "--count", "2", "--base", "18"]) == EXIT_OK
        assert capsys.readouterr().out == "F(41 % 23, 2)\nevaluates to 2\n"

    def test_drawn_base(self, capsys):
        assert run(["hide", "--value", "0", "--count", "5", "--seed", "1"]) == EXIT_OK
        call, result = capsys.readouterr().out.splitlines()
        assert call.startswith("F(") and call.endswith(", 5)")
        assert result == "evaluates to 0"

    def test_base_must_match_value(self):
        assert run(["hide", "--value", "3", "--count", "2", "--base", "18"]) == EXIT_INPUT_ERROR

    def test_unhideable_value(self, capsys):
        assert run(["hide", "--value", "7", "--count", "2"]) == EXIT_INPUT_ERROR
        assert "error:" in capsys.readouterr().err


class TestVerify:
    ARGS = ["verify", "--size-limit", "8", "--ops", "20", "--seed", "5"]

    def test_passes_and_is_deterministic(self, capsys):
        assert run(self.ARGS) == EXIT_OK
        first = capsys.readouterr().out
        assert first.startswith("Verification passed (seed 5)")
        assert "store_oracle" in first
        assert run(self.ARGS) == EXIT_OK
        assert capsys.readouterr().out == first

    def test_reports_counterexample(self, monkeypatch, capsys):
        monkeypatch.setattr(maps, "split_locate", lambda pos, size: SplitLocation(Half.FIRST, 0))
        assert run(self.ARGS) == EXIT_INVARIANT_VIOLATION
        assert "invariant violated in split_bijection: size=2 pos=1" in capsys.readouterr().err

    def test_bad_limit(self):
        assert run(["verify", "--size-limit", "0"]) == EXIT_INPUT_ERROR

    def test_single_job_matches_worker_pool(self, capsys):
        assert run(self.ARGS + ["--jobs", "2"]) == EXIT_OK
        pooled = capsys.readouterr().out
        assert run(self.ARGS + ["--jobs", "1"]) == EXIT_OK
        assert capsys.readouterr().out == pooled

    def test_bad_jobs(self):
        assert run(self.ARGS + ["--jobs", "0"]) == EXIT_INPUT_ERROR
