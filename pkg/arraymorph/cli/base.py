import argparse
import os
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Sequence

from tabulate import tabulate

from arraymorph.core.codegen import GeneratedClass
from arraymorph.core.constants import DEFAULT_SEED
from arraymorph.core.errors import WorkspaceError
from arraymorph.core.logger import get_logger, set_level

logger = get_logger(__name__)

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR"]


class BaseCommand(ABC):
    """
    One ``arraymorph`` subcommand.

    Subclasses declare their flags in ``add_args`` and do their work in
    ``run``, returning the process exit code. Errors are left to propagate;
    the entry point maps them to exit codes.
    """

    name: str
    help: str

    def __init__(self, args: argparse.Namespace):
        self.args = args

    @classmethod
    @abstractmethod
    def add_args(cls, parser: "argparse.ArgumentParser") -> None:
        """
        Add the subcommand's arguments to the parser.

        Args:
            parser: The subcommand's argument parser
        """
        pass

    @staticmethod
    def add_common_args(parser: "argparse.ArgumentParser") -> None:
        parser.add_argument(
            "--log-level",
            type=str.upper,
            choices=LOG_LEVELS,
            default=os.getenv("ARRAYMORPH_LOG_LEVEL", "WARNING").upper(),
            help="Diagnostics level on standard error (env: ARRAYMORPH_LOG_LEVEL)",
        )

    def setup_logging(self) -> None:
        set_level(self.args.log_level)

    @abstractmethod
    def run(self) -> int:
        """
        Execute the subcommand.

        Returns:
            int: Process exit code
        """
        pass


def add_seed_arg(parser: "argparse.ArgumentParser") -> None:
    parser.add_argument(
        "--seed",
        type=int,
        default=int(os.getenv("ARRAYMORPH_SEED", DEFAULT_SEED)),
        help=f"Seed for every random choice (env: ARRAYMORPH_SEED, default: {DEFAULT_SEED})",
    )


def read_text(path: Path) -> str:
    """
    Contents of a UTF-8 input file.

    Raises:
        WorkspaceError: If the file cannot be read
    """
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise WorkspaceError(f"Cannot read {path}: {e}") from e


def file_size(path: Path) -> int:
    """Size of ``path`` in bytes."""
    try:
        return Path(path).stat().st_size
    except OSError as e:
        raise WorkspaceError(f"Cannot stat {path}: {e}") from e


def print_table(title: str, rows: Sequence[Sequence[Any]], headers: Sequence[str]) -> None:
    table = tabulate(rows, headers=headers, tablefmt="grid", numalign="right", stralign="left")
    print(f"{title}\n{table}")


def print_written(title: str, classes: Sequence[GeneratedClass], paths: Sequence[Path]) -> None:
    """Summary table of written classes."""
    rows = [
        [c.name, c.variant.value, c.statement_count, len(c.calls), str(path)]
        for c, path in zip(classes, paths)
    ]
    print_table(title, rows, ["Class", "Variant", "Statements", "F calls", "File"])
