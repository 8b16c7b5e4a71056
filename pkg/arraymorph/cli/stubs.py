import argparse
from pathlib import Path

from arraymorph.cli.base import BaseCommand, print_written
from arraymorph.core.codegen import emit_stubs, prepare_directory, write_workspace
from arraymorph.core.constants import EXIT_OK


class StubsCommand(BaseCommand):
    """Placeholder classes so a driver program compiles before rewriting."""

    name = "stubs"
    help = "Write stub versions of all twelve predefined classes"

    @classmethod
    def add_args(cls, parser: "argparse.ArgumentParser") -> None:
        parser.add_argument("--out", required=True, help="Output directory")

    def run(self) -> int:
        classes = emit_stubs()
        paths = write_workspace(classes, prepare_directory(Path(self.args.out)))
        print_written(f"Wrote {len(paths)} stub class(es)", classes, paths)
        return EXIT_OK
