import argparse
from pathlib import Path

from arraymorph.cli.base import BaseCommand, print_written, read_text
from arraymorph.core.codegen import (
    PREDEFINED_CLASSES,
    ObfConfig,
    emit_full,
    parse_class_name,
    prepare_directory,
    write_workspace,
)
from arraymorph.core.constants import EXIT_OK
from arraymorph.core.java import scan_class_usages
from arraymorph.core.logger import get_logger

logger = get_logger(__name__)


class RewriteCommand(BaseCommand):
    """
    Replace the stubs a source file uses with full implementations.

    Class files the source does not mention are left as they are.
    """

    name = "rewrite"
    help = "Rewrite the predefined classes a source file uses into full classes"

    @classmethod
    def add_args(cls, parser: "argparse.ArgumentParser") -> None:
        parser.add_argument("--source", required=True, help="Java source using the classes")
        parser.add_argument(
            "--class-dir", dest="class_dir", required=True, help="Directory of the class files"
        )
        ObfConfig.add_args(parser)

    def run(self) -> int:
        config = ObfConfig.from_args(self.args)
        used = scan_class_usages(read_text(Path(self.args.source)))
        if not used:
            print(f"nothing to rewrite: {self.args.source} uses no predefined class")
            return EXIT_OK

        classes = []
        for name in PREDEFINED_CLASSES:
            if name in used:
                op, kind = parse_class_name(name)
                classes.append(emit_full(op, kind, config))
        logger.info(f"{self.args.source} uses {', '.join(c.name for c in classes)}")

        paths = write_workspace(classes, prepare_directory(Path(self.args.class_dir)))
        print_written(f"Rewrote {len(paths)} class(es)", classes, paths)
        return EXIT_OK
