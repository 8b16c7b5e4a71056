"""
Index mappings of the array restructuring operations.

Every function here is pure and total on its stated domain; out-of-range
input raises instead of wrapping. The store and the code emitter both
render these mappings, so they are the single source of truth for where a
logical element lives.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from arraymorph.core.errors import IndexOutOfRangeError, InvalidExtentError


class Half(Enum):
    """Sub-array of a split array."""

    FIRST = "first"  # even logical positions
    SECOND = "second"  # odd logical positions


class MergeSource(Enum):
    """Input array a merged position is read from."""

    A = "a"
    B = "b"


@dataclass(frozen=True)
class SplitLocation:
    """Position of an element inside a split array."""

    half: Half
    offset: int


@dataclass(frozen=True)
class Dim2:
    """Shape of a two-dimensional (row-major) layout."""

    rows: int
    cols: int

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise InvalidExtentError(
                f"Dimensions must be positive, got {self.rows}x{self.cols}"
            )

    @property
    def cells(self) -> int:
        return self.rows * self.cols


def _check_size(size: int) -> None:
    if size < 1:
        raise InvalidExtentError(f"Array size must be at least 1, got {size}")


def _check_index(pos: int, bound: int, what: str = "position") -> None:
    if not 0 <= pos < bound:
        raise IndexOutOfRangeError(f"{what} {pos} out of range [0, {bound})")


def split_sizes(size: int) -> tuple[int, int]:
    """
    Lengths of the two sub-arrays of a split array.

    Odd sizes put the extra element in the first half, which holds the
    even positions.

    Args:
        size: Logical length of the array

    Returns:
        (first_len, second_len), summing to size
    """
    _check_size(size)
    if size % 2 == 0:
        return size // 2, size // 2
    first = size // 2 + 1
    return first, size - first


def split_locate(pos: int, size: int) -> SplitLocation:
    """Sub-array and offset of logical position ``pos`` in a split array."""
    _check_size(size)
    _check_index(pos, size)
    if pos % 2 == 0:
        return SplitLocation(Half.FIRST, pos // 2)
    return SplitLocation(Half.SECOND, pos // 2)


def merge_sizes(len_a: int, len_b: int) -> int:
    """Length of the array produced by merging arrays of the given lengths."""
    if len_a < 0 or len_b < 0:
        raise InvalidExtentError(
            f"Array lengths must be non-negative, got {len_a} and {len_b}"
        )
    return len_a + len_b


def merge_locate(pos: int, len_a: int, len_b: int) -> tuple[MergeSource, int]:
    """
    Source array and offset of position ``pos`` of a merged array.

    The first 2*min(len_a, len_b) positions interleave A and B (even from A,
    odd from B); the remaining positions continue the longer input in order.
    This is the inverse of splitting, so merging the halves of a split array
    restores it.
    """
    _check_index(pos, merge_sizes(len_a, len_b))
    shared = min(len_a, len_b)
    if pos < 2 * shared:
        source = MergeSource.A if pos % 2 == 0 else MergeSource.B
        return source, pos // 2
    tail = pos - 2 * shared
    source = MergeSource.A if len_a > len_b else MergeSource.B
    return source, shared + tail


def fold_dims(size: int, cols_hint: Optional[int] = None) -> Dim2:
    """
    Shape a 1D array of ``size`` elements is folded into.

    Without a hint the shape is near-square: cols = ceil(sqrt(size)).
    Rows are the fewest that hold every element, so at most the last row
    carries padding.
    """
    _check_size(size)
    if cols_hint is not None and cols_hint < 1:
        raise InvalidExtentError(f"Column hint must be at least 1, got {cols_hint}")
    cols = cols_hint if cols_hint is not None else math.isqrt(size - 1) + 1
    rows = -(-size // cols)
    return Dim2(rows, cols)


def fold_locate(pos: int, dims: Dim2) -> tuple[int, int]:
    """Row-major (row, col) cell of position ``pos``."""
    _check_index(pos, dims.cells)
    return pos // dims.cols, pos % dims.cols


def flatten_locate(row: int, col: int, dims: Dim2) -> int:
    """Row-major position of cell (row, col); inverse of ``fold_locate``."""
    _check_index(row, dims.rows, "row")
    _check_index(col, dims.cols, "column")
    return row * dims.cols + col
