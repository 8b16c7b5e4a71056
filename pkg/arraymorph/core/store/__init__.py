from typing import Optional, Sequence

from arraymorph.core.kinds import ElementKind, RestructureOp
from arraymorph.core.store.base_store import RestructuredStore, coerce_value
from arraymorph.core.store.flattened_store import FlattenedStore
from arraymorph.core.store.folded_store import FoldedStore
from arraymorph.core.store.split_store import SplitStore


class Store:
    """
    Factory class for restructured stores.

    Creates the store model of the class generated for ``op`` and ``kind``.
    """

    __CLASS_MAP: dict[RestructureOp, type[RestructuredStore]] = {
        RestructureOp.SPLIT: SplitStore,
        RestructureOp.FOLDED: FoldedStore,
        RestructureOp.FLATTENED: FlattenedStore,
    }

    def __new__(
        cls,
        op: RestructureOp,
        kind: ElementKind,
        extents: Sequence[int],
        index_offset: Optional[int] = None,
    ) -> "RestructuredStore":
        """
        Allocate a store with every cell at the kind default.

        Args:
            op: Restructuring operation of the modelled class
            kind: Element kind
            extents: [size] for split/folded stores, [rows, cols] for flattened ones
            index_offset: Offset b of the index permutation; None for no permutation

        Raises:
            InvalidExtentError: On a zero extent or the wrong number of extents
        """
        return cls.__CLASS_MAP[op](kind, tuple(extents), index_offset)


__all__ = [
    "FlattenedStore",
    "FoldedStore",
    "RestructuredStore",
    "SplitStore",
    "Store",
    "coerce_value",
]
