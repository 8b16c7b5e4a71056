import argparse
import sys
import traceback
from typing import Optional, Sequence

from dotenv import load_dotenv

from arraymorph import __version__
from arraymorph.cli.base import BaseCommand
from arraymorph.cli.generate import GenerateCommand
from arraymorph.cli.hide import HideCommand
from arraymorph.cli.metrics import MetricsCommand
from arraymorph.cli.rewrite import RewriteCommand
from arraymorph.cli.stubs import StubsCommand
from arraymorph.cli.verify import VerifyCommand
from arraymorph.core.constants import EXIT_INPUT_ERROR, EXIT_INVARIANT_VIOLATION
from arraymorph.core.errors import ArrayMorphError, InvariantViolation
from arraymorph.core.logger import get_logger

logger = get_logger(__name__)

COMMANDS: list[type[BaseCommand]] = [
    GenerateCommand,
    StubsCommand,
    RewriteCommand,
    MetricsCommand,
    HideCommand,
    VerifyCommand,
]


class ArgumentParser(argparse.ArgumentParser):
    """Usage errors are input errors, so they exit 1 rather than argparse's 2."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = ArgumentParser(
        prog="arraymorph",
        description="Array restructuring and constant hiding for Java sources",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        subparser = subparsers.add_parser(command.name, help=command.help)
        command.add_args(subparser)
        BaseCommand.add_common_args(subparser)
        subparser.set_defaults(command_class=command)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse ``argv`` and run the chosen subcommand.

    Returns:
        int: 0 on success, 1 on bad input, 2 when a self-check fails
    """
    load_dotenv()
    args = build_parser().parse_args(argv)
    command = args.command_class(args)
    command.setup_logging()

    try:
        return command.run()
    except InvariantViolation as e:
        print(f"invariant violated in {e.suite}: {e.counterexample}", file=sys.stderr)
        return EXIT_INVARIANT_VIOLATION
    except (ArrayMorphError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except Exception as e:
        logger.error(f"Unexpected error in {command.name}: {e}")
        traceback.print_exc()
        return EXIT_INVARIANT_VIOLATION


if __name__ == "__main__":
    sys.exit(run())
