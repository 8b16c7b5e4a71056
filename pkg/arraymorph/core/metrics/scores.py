"""
Obfuscation quality scores.

All arithmetic is done on ``Decimal`` so half-up rounding of the displayed
values is exact. S_LOC and S_storage/S_runtime are rounded to two decimals
before they are weighted; the published score tables are composed that way.
"""

from decimal import ROUND_HALF_UP, Decimal
from typing import Union

from arraymorph.core.constants import (
    POTENCY_WEIGHT,
    QUALITY_POTENCY_FACTOR,
    RUNTIME_WEIGHT,
    STORAGE_WEIGHT,
)
from arraymorph.core.errors import MetricsInputError

Number = Union[int, float, Decimal]


def to_decimal(value: Number) -> Decimal:
    """Decimal from the shortest text form of ``value`` (0.1 stays 0.1)."""
    return value if isinstance(value, Decimal) else Decimal(str(value))


def round_half_up(value: Number, places: int = 2) -> Decimal:
    """``value`` rounded half away from zero to ``places`` decimals."""
    return to_decimal(value).quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_UP)


def _ratio(original: Number, obfuscated: Number, what: str) -> Decimal:
    original = to_decimal(original)
    if original <= 0:
        raise MetricsInputError(f"Original {what} must be positive, got {original}")
    return (to_decimal(obfuscated) - original) / original


def composite_loc(
    source_stmts: int, class_stmts: int, distinct_call_count: int, stmts_per_call: int
) -> int:
    """
    LOC of an obfuscated program.

    Each distinct F call is charged as an inlined copy of the helper, so the
    total is ``source + calls * stmts_per_call + class``.

    Raises:
        MetricsInputError: If an input is negative or the total is zero
    """
    parts = {
        "source_stmts": source_stmts,
        "class_stmts": class_stmts,
        "distinct_call_count": distinct_call_count,
        "stmts_per_call": stmts_per_call,
    }
    negative = {k: v for k, v in parts.items() if v < 0}
    if negative:
        raise MetricsInputError(f"LOC components must be non-negative, got {negative}")
    total = source_stmts + distinct_call_count * stmts_per_call + class_stmts
    if total == 0:
        raise MetricsInputError("LOC of an empty program is undefined")
    return total


def s_loc(loc_orig: int, loc_obf: int) -> Decimal:
    """Relative LOC growth, ``(loc_obf - loc_orig) / loc_orig``."""
    if loc_orig < 1:
        raise MetricsInputError(f"loc_orig must be at least 1, got {loc_orig}")
    return _ratio(loc_orig, loc_obf, "LOC")


def s_pot(s_loc_value: Number, x_weight: Number = POTENCY_WEIGHT) -> Decimal:
    """Potency, the weight times S_LOC rounded to two decimals."""
    x_weight = to_decimal(x_weight)
    if x_weight <= 0:
        raise MetricsInputError(f"Potency weight must be positive, got {x_weight}")
    return x_weight * round_half_up(s_loc_value)


def s_storage(size_orig: Number, size_obf: Number) -> Decimal:
    """Relative file size growth."""
    return _ratio(size_orig, size_obf, "file size")


def s_runtime(t_orig: Number, t_obf: Number) -> Decimal:
    """Relative runtime overhead; any unit, as long as both timings share it."""
    return _ratio(t_orig, t_obf, "runtime")


def s_cst(
    s_storage_value: Number,
    s_runtime_value: Number,
    y2: Number = STORAGE_WEIGHT,
    z2: Number = RUNTIME_WEIGHT,
) -> Decimal:
    """Cost, weighted from storage and runtime scores rounded to two decimals."""
    return to_decimal(y2) * round_half_up(s_storage_value) + to_decimal(z2) * round_half_up(
        s_runtime_value
    )


def s_quality(s_pot_value: Number, s_cst_value: Number) -> Decimal:
    """Quality on a 100-point scale, at full precision."""
    return to_decimal(QUALITY_POTENCY_FACTOR) * to_decimal(s_pot_value) - to_decimal(s_cst_value)
