import argparse
import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Optional

import toml

from arraymorph.core.constants import DEFAULT_SEED, MAX_HIDE_COUNT, MIN_HIDE_COUNT
from arraymorph.core.errors import HidingRangeError, WorkspaceError

CONFIG_SECTION = "obfuscation"


def _env_flag(name: str) -> bool:
    return os.getenv(name, "false").lower() in ("1", "true", "yes")


@dataclass(frozen=True)
class ObfConfig:
    """
    Obfuscation settings for full class emission.

    Attributes:
        hide_constants: Replace the class's hideable literals with F calls
        hide_count: Chain depth of every call; None draws a distinct depth per site
        surface_modulus: Render calls as ``F(A % B, n)`` rather than ``F(y, n)``
        hide_large_literals: Also hide the permutation offset as ``q + F(...)``
        index_obfuscate: Permute logical positions before the layout mapping
        index_offset: Offset b of the permutation; None draws it from the seed
        seed: Seed of every random choice made during emission
    """

    hide_constants: bool = False
    hide_count: Optional[int] = None
    surface_modulus: bool = True
    hide_large_literals: bool = False
    index_obfuscate: bool = False
    index_offset: Optional[int] = None
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if self.hide_count is not None and not (
            MIN_HIDE_COUNT <= self.hide_count <= MAX_HIDE_COUNT
        ):
            raise HidingRangeError(
                f"hide_count must be in [{MIN_HIDE_COUNT}, {MAX_HIDE_COUNT}], got {self.hide_count}"
            )
        if self.index_offset is not None and self.index_offset < 0:
            raise ValueError(f"index_offset must be non-negative, got {self.index_offset}")

    @classmethod
    def add_args(cls, parser: "argparse.ArgumentParser") -> None:
        """Add obfuscation arguments"""
        parser.add_argument(
            "--seed",
            type=int,
            default=None,
            help=f"Seed for every random choice (env: ARRAYMORPH_SEED, default: {DEFAULT_SEED})",
        )
        parser.add_argument(
            "--hide",
            action="store_true",
            default=None,
            help="Hide integer literals behind F(...) calls (env: ARRAYMORPH_HIDE)",
        )
        parser.add_argument(
            "--index-obfuscate",
            dest="index_obfuscate",
            action="store_true",
            default=None,
            help="Permute array indices with an affine map (env: ARRAYMORPH_INDEX_OBFUSCATE)",
        )
        parser.add_argument(
            "--hide-count",
            dest="hide_count",
            type=int,
            default=None,
            help=f"Fixed chain depth for every F call ({MIN_HIDE_COUNT}-{MAX_HIDE_COUNT}); drawn per site if omitted",
        )
        parser.add_argument(
            "--config",
            type=str,
            default=os.getenv("ARRAYMORPH_CONFIG"),
            help=f"TOML file with an [{CONFIG_SECTION}] table (env: ARRAYMORPH_CONFIG)",
        )

    @classmethod
    def from_env(cls) -> "ObfConfig":
        """Settings taken from ``ARRAYMORPH_*`` variables; unset ones keep their defaults."""
        values: dict[str, Any] = {}
        if os.getenv("ARRAYMORPH_HIDE") is not None:
            values["hide_constants"] = _env_flag("ARRAYMORPH_HIDE")
        if os.getenv("ARRAYMORPH_INDEX_OBFUSCATE") is not None:
            values["index_obfuscate"] = _env_flag("ARRAYMORPH_INDEX_OBFUSCATE")
        if os.getenv("ARRAYMORPH_SEED") is not None:
            values["seed"] = int(os.environ["ARRAYMORPH_SEED"])
        return cls(**values)

    @classmethod
    def from_toml(cls, path: Path, base: Optional["ObfConfig"] = None) -> "ObfConfig":
        """
        Load settings from the ``[obfuscation]`` table of a TOML file.

        Args:
            path: TOML file
            base: Settings for keys the table leaves out; defaults when None

        Raises:
            WorkspaceError: If the file cannot be read
            ValueError: If the table is missing, has unknown keys or a value of the wrong type
        """
        try:
            data = toml.load(path)
        except OSError as e:
            raise WorkspaceError(f"Cannot read config file {path}: {e}") from e

        if CONFIG_SECTION not in data:
            raise ValueError(f"Configuration must have '{CONFIG_SECTION}' section")

        section = data[CONFIG_SECTION]
        unknown = sorted(set(section) - set(_FIELD_TYPES))
        if unknown:
            raise ValueError(f"Unknown keys in [{CONFIG_SECTION}]: {unknown}")
        for key, value in section.items():
            # bool is an int subclass, so compare exact types
            if type(value) is not _FIELD_TYPES[key]:
                raise ValueError(
                    f"[{CONFIG_SECTION}] {key} must be {_FIELD_TYPES[key].__name__}, got {value!r}"
                )
        return replace(base if base is not None else cls(), **section)

    @classmethod
    def from_args(cls, args: Any) -> "ObfConfig":
        """
        Build the config from parsed arguments.

        Precedence: command-line flags, then the TOML file, then environment
        variables, then defaults. Each layer only sets the keys it names.
        """
        config = cls.from_env()
        if getattr(args, "config", None):
            config = cls.from_toml(Path(args.config), config)

        overrides = {
            "hide_constants": getattr(args, "hide", None),
            "index_obfuscate": getattr(args, "index_obfuscate", None),
            "hide_count": getattr(args, "hide_count", None),
            "seed": getattr(args, "seed", None),
        }
        return replace(config, **{k: v for k, v in overrides.items() if v is not None})


# Value type of each TOML key; None is not expressible in TOML
_FIELD_TYPES: dict[str, type] = {
    "hide_constants": bool,
    "hide_count": int,
    "surface_modulus": bool,
    "hide_large_literals": bool,
    "index_obfuscate": bool,
    "index_offset": int,
    "seed": int,
}
