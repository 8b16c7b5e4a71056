from typing import Optional

import numpy as np

from arraymorph.core.kinds import ElementKind, RestructureOp
from arraymorph.core.layout import maps
from arraymorph.core.store.base_store import RestructuredStore, new_backing


class FoldedStore(RestructuredStore):
    """
    1D interface over a row-major 2D backing.

    When the size is not a multiple of the column count the last row is
    padded; padding cells are allocated but no position reaches them.
    """

    op = RestructureOp.FOLDED

    def __init__(
        self,
        kind: ElementKind,
        extents: tuple[int, ...],
        index_offset: Optional[int] = None,
        cols_hint: Optional[int] = None,
    ):
        self.cols_hint = cols_hint
        super().__init__(kind, extents, index_offset)

    @property
    def logical_size(self) -> int:
        return self.extents[0]

    @property
    def backing(self) -> tuple[np.ndarray, ...]:
        return (self.grid,)

    def _allocate(self) -> None:
        self.dims = maps.fold_dims(self.logical_size, self.cols_hint)
        self.grid = new_backing(self.kind, (self.dims.rows, self.dims.cols))

    def _cell(self, coords: tuple[int, ...]) -> tuple[np.ndarray, tuple[int, ...]]:
        (pos,) = coords
        self._check_pos(pos)
        return self.grid, maps.fold_locate(self._permute(pos), self.dims)

    def length(self) -> int:
        return self.dims.cells
