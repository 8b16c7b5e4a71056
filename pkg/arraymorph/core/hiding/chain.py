"""
Constant hiding through the F(y, count) modulus chain.

F folds y through ``y mod s_i`` for i = count down to 1, where s_i is the
sum of the i-th factor pair. The last modulus is 5, so a call can only
evaluate to 0..4. ``hide_constant`` runs the chain backwards to build a base
that lands on a chosen constant.
"""

import random
import re
from dataclasses import dataclass
from typing import Optional

from arraymorph.core.constants import HIDEABLE_LIMIT, MAX_HIDE_COUNT, MIN_HIDE_COUNT
from arraymorph.core.errors import HidingRangeError
from arraymorph.core.hiding.factors import factor_table

CALL_PATTERN = re.compile(r"\bF\(\s*(\d+)\s*(?:%\s*(\d+)\s*)?,\s*(\d+)\s*\)")


@dataclass(frozen=True)
class HidingCall:
    """
    One ``F(...)`` call site.

    Attributes:
        base: Value F receives once the surface modulus is applied
        count: Chain depth passed as F's second argument
        hidden: Constant the call evaluates to
        surface_modulus: B of the rendered ``A % B`` form, None for ``F(base, count)``
    """

    base: int
    count: int
    hidden: int
    surface_modulus: Optional[int] = None

    def __post_init__(self):
        if f_eval(self.base, self.count) != self.hidden:
            raise HidingRangeError(
                f"F({self.base}, {self.count}) does not evaluate to {self.hidden}"
            )
        if self.surface_modulus is not None and self.surface_modulus <= self.base:
            raise HidingRangeError(
                f"Surface modulus {self.surface_modulus} must exceed base {self.base}"
            )


def _check_count(count: int) -> None:
    if not MIN_HIDE_COUNT <= count <= MAX_HIDE_COUNT:
        raise HidingRangeError(
            f"Chain depth must be in [{MIN_HIDE_COUNT}, {MAX_HIDE_COUNT}], got {count}"
        )


def _check_hideable(constant: int) -> None:
    if not 0 <= constant < HIDEABLE_LIMIT:
        raise HidingRangeError(
            f"F can only hide constants below {HIDEABLE_LIMIT} (its final modulus is 2+3), got {constant}"
        )


def f_eval(y: int, count: int) -> int:
    """Value of F(y, count)."""
    _check_count(count)
    if y < 0:
        raise HidingRangeError(f"F takes a non-negative argument, got {y}")
    sums = factor_table().sums
    for i in range(count, 0, -1):
        y %= sums[i - 1]
    return y


def _residue_steps(residue: int, step: int) -> list[int]:
    """Residues r_{step+1} whose reduction mod s_step gives ``residue``."""
    sums = factor_table().sums
    modulus, ceiling = sums[step - 1], sums[step]
    return list(range(residue, ceiling, modulus))


def _final_bases(residue: int, count: int) -> list[int]:
    # One extra turn of the outermost modulus keeps the value out of the
    # chain's own range, so the surface form is not the identity.
    modulus = factor_table().sums[count - 1]
    return [residue, residue + modulus]


def surface_modulus_for(base: int) -> Optional[int]:
    """Smallest factor-table first element greater than ``base``."""
    for first in factor_table().firsts:
        if first > base:
            return first
    return None


def hiding_call(base: int, count: int, surface: bool = True) -> HidingCall:
    """Call site for an explicit base; ``hidden`` is whatever F yields."""
    return HidingCall(
        base=base,
        count=count,
        hidden=f_eval(base, count),
        surface_modulus=surface_modulus_for(base) if surface else None,
    )


def hide_constant(
    constant: int, count: int, seed: int, surface: bool = True
) -> HidingCall:
    """
    Build a call site evaluating to ``constant`` with chain depth ``count``.

    The residues are grown one factor pair at a time, choosing at random
    among every value that still reduces to the previous residue, so all
    outputs of ``candidate_bases`` are reachable.

    Args:
        constant: Value to hide, 0..4
        count: Chain depth, 1..13
        seed: Seed of the generator; equal seeds give equal calls
        surface: Render as ``F(A % B, count)`` when a surface modulus exists

    Raises:
        HidingRangeError: If constant or count is out of range
    """
    _check_hideable(constant)
    _check_count(count)
    rng = random.Random(seed)

    residue = constant
    for step in range(1, count):
        residue = rng.choice(_residue_steps(residue, step))
    base = rng.choice(_final_bases(residue, count))
    return hiding_call(base, count, surface=surface)


def candidate_bases(constant: int, count: int) -> list[int]:
    """Every base ``hide_constant`` can return for these arguments, ascending."""
    _check_hideable(constant)
    _check_count(count)
    residues = [constant]
    for step in range(1, count):
        residues = [r for prev in residues for r in _residue_steps(prev, step)]
    return sorted(b for r in residues for b in _final_bases(r, count))


def render_call(call: HidingCall) -> str:
    """Java text of a call site, ``F(A % B, count)`` or ``F(base, count)``."""
    if call.surface_modulus is None:
        return f"F({call.base}, {call.count})"
    numerator = call.base + call.surface_modulus
    return f"F({numerator} % {call.surface_modulus}, {call.count})"


def parse_call(text: str) -> tuple[int, int]:
    """
    Base and count of a rendered call.

    Raises:
        ValueError: If ``text`` holds no F call
    """
    match = CALL_PATTERN.search(text)
    if match is None:
        raise ValueError(f"No F call in: {text!r}")
    numerator, modulus, count = match.groups()
    base = int(numerator) % int(modulus) if modulus else int(numerator)
    return base, int(count)


def find_calls(source_text: str) -> list[str]:
    """Rendered F calls in ``source_text``, in order of appearance."""
    return [m.group(0) for m in CALL_PATTERN.finditer(source_text)]
