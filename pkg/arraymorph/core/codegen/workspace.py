import os
import tempfile
from pathlib import Path
from typing import Iterable

from arraymorph.core.codegen.emitter import GeneratedClass
from arraymorph.core.errors import WorkspaceError
from arraymorph.core.logger import get_logger

logger = get_logger(__name__)


def prepare_directory(directory: Path) -> Path:
    """
    Create ``directory`` (and parents) if needed.

    Raises:
        WorkspaceError: If the path exists as a file or cannot be created
    """
    directory = Path(directory)
    try:
        directory.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise WorkspaceError(f"Cannot create output directory {directory}: {e}") from e
    return directory


def _write_temp(directory: Path, generated: GeneratedClass, staged: list[tuple[Path, Path]]) -> None:
    fd, tmp = tempfile.mkstemp(prefix=f".{generated.name}.", suffix=".tmp", dir=directory)
    staged.append((Path(tmp), directory / generated.file_name))
    with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as f:
        f.write(generated.source_text)


def write_workspace(classes: Iterable[GeneratedClass], directory: Path) -> list[Path]:
    """
    Write each class to ``<directory>/<ClassName>.java``.

    Every file is first written to a temporary name in the same directory
    and then moved into place, so a failure leaves no partial file behind.
    Existing files of the same name are replaced.

    Args:
        classes: Classes to write
        directory: Existing output directory

    Returns:
        Paths written, in input order

    Raises:
        WorkspaceError: If the directory is missing or a file cannot be written
    """
    directory = Path(directory)
    if not directory.is_dir():
        raise WorkspaceError(f"Output directory {directory} does not exist")

    staged: list[tuple[Path, Path]] = []
    try:
        for generated in classes:
            _write_temp(directory, generated, staged)
        written = []
        for tmp, target in staged:
            os.replace(tmp, target)
            written.append(target)
            logger.info(f"Wrote {target}")
    except OSError as e:
        for tmp, _ in staged:
            tmp.unlink(missing_ok=True)
        raise WorkspaceError(f"Cannot write to {directory}: {e}") from e
    return written
