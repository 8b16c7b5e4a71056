import os

import pytest

from arraymorph.core.codegen import emit_full, emit_stub, prepare_directory, write_workspace
from arraymorph.core.errors import WorkspaceError
from arraymorph.core.kinds import ElementKind, RestructureOp


class TestWorkspace:
    def setup_method(self):
        self.stub = emit_stub(RestructureOp.FOLDED, ElementKind.CHAR)
        self.full = emit_full(RestructureOp.FOLDED, ElementKind.CHAR)

    def test_full_replaces_stub(self, tmp_path):
        write_workspace([self.stub], tmp_path)
        (path,) = write_workspace([self.full], tmp_path)
        assert path == tmp_path / "FoldedArray_Char.java"
        assert path.read_text() == self.full.source_text
        assert os.listdir(tmp_path) == ["FoldedArray_Char.java"]

    def test_paths_in_input_order(self, tmp_path):
        other = emit_stub(RestructureOp.SPLIT, ElementKind.DOUBLE)
        paths = write_workspace([self.full, other], tmp_path)
        assert [p.name for p in paths] == ["FoldedArray_Char.java", "SplitArray_Double.java"]

    def test_missing_directory(self, tmp_path):
        with pytest.raises(WorkspaceError):
            write_workspace([self.stub], tmp_path / "absent")

    def test_prepare_creates_parents(self, tmp_path):
        directory = prepare_directory(tmp_path / "a" / "b")
        assert directory.is_dir()

    def test_prepare_over_a_file(self, tmp_path):
        target = tmp_path / "file"
        target.write_text("x")
        with pytest.raises(WorkspaceError):
            prepare_directory(target)

    def test_failed_move_leaves_no_partial_files(self, tmp_path, monkeypatch):
        write_workspace([self.stub], tmp_path)

        def fail(src, dst):
            raise OSError("disk full")

        monkeypatch.setattr(os, "replace", fail)
        with pytest.raises(WorkspaceError, match="disk full"):
            write_workspace([self.full, emit_stub(RestructureOp.SPLIT, ElementKind.INTEGER)], tmp_path)
        assert os.listdir(tmp_path) == ["FoldedArray_Char.java"]
        assert (tmp_path / "FoldedArray_Char.java").read_text() == self.stub.source_text
