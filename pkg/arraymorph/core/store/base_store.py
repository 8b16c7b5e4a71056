from abc import ABC, abstractmethod
from typing import Iterator, Optional, Union

import numpy as np

from arraymorph.core.errors import IndexOutOfRangeError, InvalidExtentError, KindMismatchError
from arraymorph.core.kinds import ElementKind, RestructureOp, Value
from arraymorph.core.layout import affine
from arraymorph.core.layout.affine import AffineMap

Coords = Union[int, tuple[int, ...]]

INT_MIN, INT_MAX = -(2**31), 2**31 - 1  # Java int


def coerce_value(kind: ElementKind, value: Value) -> Value:
    """
    Check ``value`` against ``kind`` and return it in stored form.

    Raises:
        KindMismatchError: If the value cannot be held by a cell of this kind
    """
    if kind is ElementKind.INTEGER:
        if isinstance(value, bool) or not isinstance(value, int):
            raise KindMismatchError(f"Integer cell cannot hold {value!r}")
        if not INT_MIN <= value <= INT_MAX:
            raise KindMismatchError(f"{value} does not fit a 32-bit Integer cell")
        return value
    if kind is ElementKind.DOUBLE:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise KindMismatchError(f"Double cell cannot hold {value!r}")
        return float(value)
    if kind is ElementKind.CHAR:
        if not isinstance(value, str) or len(value) != 1:
            raise KindMismatchError(f"Char cell needs a single character, got {value!r}")
        return value
    if not isinstance(value, str):
        raise KindMismatchError(f"String cell cannot hold {value!r}")
    return value


def new_backing(kind: ElementKind, shape: Union[int, tuple[int, int]]) -> np.ndarray:
    """Array of ``shape`` with every cell at the kind's default."""
    if kind is ElementKind.INTEGER:
        return np.zeros(shape, dtype=np.int32)
    if kind is ElementKind.DOUBLE:
        return np.zeros(shape, dtype=np.float64)
    # Not np.full: it passes "\x00" through a string dtype, leaving ""
    cells = np.empty(shape, dtype=object)
    cells.fill(kind.default)
    return cells


def _to_python(cell) -> Value:
    return cell.item() if isinstance(cell, np.generic) else cell


class RestructuredStore(ABC):
    """
    In-process model of one generated accessor class.

    Subclasses own the backing layout; this base handles coordinate arity,
    value kinds and the optional index permutation every emitted class can
    apply before its layout mapping.
    """

    op: RestructureOp

    def __init__(
        self,
        kind: ElementKind,
        extents: tuple[int, ...],
        index_offset: Optional[int] = None,
    ):
        if len(extents) != self.op.arity:
            raise InvalidExtentError(
                f"{self.op.class_prefix} store takes {self.op.arity} extent(s), got {len(extents)}"
            )
        if any(e < 1 for e in extents):
            raise InvalidExtentError(f"Extents must be positive, got {list(extents)}")
        self.kind = kind
        self.extents = tuple(extents)
        self.index_map: Optional[AffineMap] = (
            affine.index_map_for(self.logical_size, index_offset)
            if index_offset is not None
            else None
        )
        self._allocate()

    @property
    @abstractmethod
    def logical_size(self) -> int:
        """Number of addressable logical elements."""
        pass

    @property
    @abstractmethod
    def backing(self) -> tuple[np.ndarray, ...]:
        """Backing arrays, in layout order."""
        pass

    @abstractmethod
    def _allocate(self) -> None:
        pass

    @abstractmethod
    def _cell(self, coords: tuple[int, ...]) -> tuple[np.ndarray, tuple[int, ...]]:
        """Backing array and index holding the element at ``coords``."""
        pass

    @abstractmethod
    def length(self) -> int:
        """Value the emitted ``lengthArray()`` returns."""
        pass

    def _permute(self, pos: int) -> int:
        """Apply the index permutation, if any, to a logical position."""
        if self.index_map is None:
            return pos
        return affine.affine_index(pos, self.index_map)

    def _check_pos(self, pos: int) -> None:
        if not 0 <= pos < self.logical_size:
            raise IndexOutOfRangeError(
                f"position {pos} out of range [0, {self.logical_size})"
            )

    def _normalize(self, coords: Coords) -> tuple[int, ...]:
        coords = (coords,) if isinstance(coords, int) else tuple(coords)
        if len(coords) != self.op.arity:
            raise IndexOutOfRangeError(
                f"{self.op.class_prefix} store is addressed with {self.op.arity} coordinate(s), got {len(coords)}"
            )
        return coords

    def set(self, coords: Coords, value: Value) -> "RestructuredStore":
        """Write one element; returns the store for chaining."""
        array, index = self._cell(self._normalize(coords))
        array[index] = coerce_value(self.kind, value)
        return self

    def get(self, coords: Coords) -> Value:
        """Element at ``coords``, or the kind default if never written."""
        array, index = self._cell(self._normalize(coords))
        return _to_python(array[index])

    def coordinates(self) -> Iterator[tuple[int, ...]]:
        """Every valid coordinate tuple in logical order."""
        if self.op.arity == 1:
            return ((pos,) for pos in range(self.logical_size))
        rows, cols = self.extents
        return ((r, c) for r in range(rows) for c in range(cols))

    def values(self) -> list[Value]:
        """Logical contents, in logical order."""
        return [self.get(c) for c in self.coordinates()]

    def __repr__(self) -> str:
        permuted = "" if self.index_map is None else f", index_map={self.index_map}"
        return (
            f"{type(self).__name__}(kind={self.kind.name}, "
            f"extents={self.extents}{permuted})"
        )
