import numpy as np

from arraymorph.core.kinds import RestructureOp
from arraymorph.core.layout import maps
from arraymorph.core.layout.maps import Dim2
from arraymorph.core.store.base_store import RestructuredStore, new_backing


class FlattenedStore(RestructuredStore):
    """2D interface over a 1D row-major backing."""

    op = RestructureOp.FLATTENED

    @property
    def logical_size(self) -> int:
        rows, cols = self.extents
        return rows * cols

    @property
    def backing(self) -> tuple[np.ndarray, ...]:
        return (self.cells,)

    def _allocate(self) -> None:
        self.dims = Dim2(*self.extents)
        self.cells = new_backing(self.kind, self.logical_size)

    def _cell(self, coords: tuple[int, ...]) -> tuple[np.ndarray, tuple[int, ...]]:
        row, col = coords
        pos = maps.flatten_locate(row, col, self.dims)
        return self.cells, (self._permute(pos),)

    def length(self) -> int:
        return len(self.cells)
