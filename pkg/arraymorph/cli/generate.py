import argparse
from pathlib import Path

from arraymorph.cli.base import BaseCommand, print_written, read_text
from arraymorph.core.codegen import (
    ObfConfig,
    emit_full,
    plan_classes,
    prepare_directory,
    write_workspace,
)
from arraymorph.core.constants import EXIT_OK
from arraymorph.core.errors import EmptyInputError
from arraymorph.core.java import parse_infile
from arraymorph.core.kinds import RestructureOp
from arraymorph.core.logger import get_logger, log_issues

logger = get_logger(__name__)


class GenerateCommand(BaseCommand):
    """Full classes for every element kind declared in a manifest."""

    name = "generate"
    help = "Generate restructured array classes from a declaration manifest"

    @classmethod
    def add_args(cls, parser: "argparse.ArgumentParser") -> None:
        parser.add_argument(
            "--infile", required=True, help="Declaration manifest, one array per line"
        )
        parser.add_argument(
            "--op",
            required=True,
            choices=[op.cli_name for op in RestructureOp],
            help="Restructuring operation",
        )
        parser.add_argument("--out", required=True, help="Output directory")
        ObfConfig.add_args(parser)

    def run(self) -> int:
        config = ObfConfig.from_args(self.args)
        op = RestructureOp.from_cli_name(self.args.op)

        decls, issues = parse_infile(read_text(Path(self.args.infile)))
        log_issues(logger, issues, self.args.infile)
        if not decls:
            raise EmptyInputError(f"no array declarations found in {self.args.infile}")

        plan, plan_issues = plan_classes(decls, op)
        log_issues(logger, plan_issues, self.args.infile)
        if not plan:
            raise EmptyInputError(
                f"no {op.arity}D declarations in {self.args.infile} to {op.cli_name}"
            )

        classes = [emit_full(op, kind, config) for op, kind in plan]
        paths = write_workspace(classes, prepare_directory(Path(self.args.out)))
        print_written(f"Generated {len(paths)} {op.class_prefix} class(es)", classes, paths)
        return EXIT_OK
