import numpy as np

from arraymorph.core.kinds import RestructureOp
from arraymorph.core.layout import maps
from arraymorph.core.layout.maps import Half
from arraymorph.core.store.base_store import RestructuredStore, new_backing


class SplitStore(RestructuredStore):
    """Even positions in the first sub-array, odd positions in the second."""

    op = RestructureOp.SPLIT

    @property
    def logical_size(self) -> int:
        return self.extents[0]

    @property
    def backing(self) -> tuple[np.ndarray, ...]:
        return self.first, self.second

    def _allocate(self) -> None:
        first_len, second_len = maps.split_sizes(self.logical_size)
        self.first = new_backing(self.kind, first_len)
        self.second = new_backing(self.kind, second_len)

    def _cell(self, coords: tuple[int, ...]) -> tuple[np.ndarray, tuple[int, ...]]:
        (pos,) = coords
        self._check_pos(pos)
        location = maps.split_locate(self._permute(pos), self.logical_size)
        array = self.first if location.half is Half.FIRST else self.second
        return array, (location.offset,)

    def length(self) -> int:
        return len(self.first) + len(self.second)
