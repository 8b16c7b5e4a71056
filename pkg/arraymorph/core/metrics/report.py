from dataclasses import dataclass
from decimal import Decimal
from typing import Any, Optional

from arraymorph.core.constants import POTENCY_WEIGHT, RUNTIME_WEIGHT, STORAGE_WEIGHT
from arraymorph.core.errors import MetricsInputError
from arraymorph.core.metrics import scores
from arraymorph.core.metrics.scores import Number, round_half_up

# Decimals shown for each score
DISPLAY_PLACES = {
    "s_loc": 2,
    "s_pot": 2,
    "s_storage": 2,
    "s_runtime": 2,
    "s_cst": 3,
    "s_quality": 2,
}


def _plain(value: Decimal) -> str:
    text = format(value.normalize(), "f")
    return "0" if text in ("-0", "") else text


@dataclass(frozen=True)
class MetricsInput:
    """
    Measurements of an original and an obfuscated program.

    Attributes:
        loc_orig: Statements of the original program
        loc_obf: Statements of the obfuscated program, classes and F calls included
        size_orig: Original file size in bytes
        size_obf: Obfuscated file size in bytes
        t_orig: Original runtime, None when not measured
        t_obf: Obfuscated runtime in the same unit, None when not measured
        x_weight: Potency weight
        y2: Storage weight of the cost
        z2: Runtime weight of the cost
    """

    loc_orig: int
    loc_obf: int
    size_orig: Number
    size_obf: Number
    t_orig: Optional[Number] = None
    t_obf: Optional[Number] = None
    x_weight: Number = POTENCY_WEIGHT
    y2: Number = STORAGE_WEIGHT
    z2: Number = RUNTIME_WEIGHT

    def __post_init__(self):
        if self.loc_orig < 1 or self.loc_obf < 1:
            raise MetricsInputError(
                f"LOC must be at least 1, got loc_orig={self.loc_orig}, loc_obf={self.loc_obf}"
            )
        if self.size_orig < 1 or self.size_obf < 1:
            raise MetricsInputError(
                f"File sizes must be positive, got size_orig={self.size_orig}, size_obf={self.size_obf}"
            )
        if (self.t_orig is None) != (self.t_obf is None):
            raise MetricsInputError("Give both runtimes or neither")
        if self.t_obf is not None and self.t_obf < 0:
            raise MetricsInputError(f"Runtime must be non-negative, got t_obf={self.t_obf}")
        for name in ("x_weight", "y2", "z2"):
            if getattr(self, name) <= 0:
                raise MetricsInputError(f"{name} must be positive, got {getattr(self, name)}")

    @property
    def runtime_measured(self) -> bool:
        return self.t_orig is not None

    @classmethod
    def from_components(
        cls,
        loc_orig: int,
        source_stmts: int,
        class_stmts: int,
        distinct_call_count: int,
        stmts_per_call: int,
        **kwargs: Any,
    ) -> "MetricsInput":
        """Input whose obfuscated LOC is built with ``composite_loc``."""
        loc_obf = scores.composite_loc(
            source_stmts, class_stmts, distinct_call_count, stmts_per_call
        )
        return cls(loc_orig=loc_orig, loc_obf=loc_obf, **kwargs)


@dataclass(frozen=True)
class MetricsReport:
    """Scores at full precision; ``display`` gives the rounded forms."""

    s_loc: Decimal
    s_pot: Decimal
    s_storage: Decimal
    s_runtime: Decimal
    s_cst: Decimal
    s_quality: Decimal
    runtime_measured: bool = True

    def display(self, name: str) -> Decimal:
        return round_half_up(getattr(self, name), DISPLAY_PLACES[name])

    def to_dict(self) -> dict[str, str]:
        """
        Every score and its display form, in a stable order.

        Returns:
            dictionary of ``s_x`` and ``s_x_display`` strings plus ``runtime_measured``
        """
        data = {}
        for name in DISPLAY_PLACES:
            data[name] = _plain(getattr(self, name))
            data[f"{name}_display"] = str(self.display(name))
        data["runtime_measured"] = "true" if self.runtime_measured else "false"
        return data

    def render(self) -> str:
        """One ``key=value`` line per entry of ``to_dict``."""
        return "".join(f"{key}={value}\n" for key, value in self.to_dict().items())

    def __repr__(self) -> str:
        shown = ", ".join(f"{name}={self.display(name)}" for name in DISPLAY_PLACES)
        return f"MetricsReport({shown})"


def build_report(metrics_input: MetricsInput) -> MetricsReport:
    """
    Compose all scores for ``metrics_input``.

    Unmeasured runtimes score 0 and the report is flagged with
    ``runtime_measured=False``.
    """
    s_loc = scores.s_loc(metrics_input.loc_orig, metrics_input.loc_obf)
    s_pot = scores.s_pot(s_loc, metrics_input.x_weight)
    s_storage = scores.s_storage(metrics_input.size_orig, metrics_input.size_obf)
    s_runtime = (
        scores.s_runtime(metrics_input.t_orig, metrics_input.t_obf)
        if metrics_input.runtime_measured
        else Decimal(0)
    )
    s_cst = scores.s_cst(s_storage, s_runtime, metrics_input.y2, metrics_input.z2)
    return MetricsReport(
        s_loc=s_loc,
        s_pot=s_pot,
        s_storage=s_storage,
        s_runtime=s_runtime,
        s_cst=s_cst,
        s_quality=scores.s_quality(s_pot, s_cst),
        runtime_measured=metrics_input.runtime_measured,
    )
