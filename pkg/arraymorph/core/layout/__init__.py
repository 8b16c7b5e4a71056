from arraymorph.core.layout.affine import (
    AffineMap,
    affine_index,
    affine_inverse,
    affine_valid,
    choose_multiplier,
    index_map_for,
)
from arraymorph.core.layout.maps import (
    Dim2,
    Half,
    MergeSource,
    SplitLocation,
    flatten_locate,
    fold_dims,
    fold_locate,
    merge_locate,
    merge_sizes,
    split_locate,
    split_sizes,
)

__all__ = [
    "AffineMap",
    "Dim2",
    "Half",
    "MergeSource",
    "SplitLocation",
    "affine_index",
    "affine_inverse",
    "affine_valid",
    "choose_multiplier",
    "flatten_locate",
    "fold_dims",
    "fold_locate",
    "index_map_for",
    "merge_locate",
    "merge_sizes",
    "split_locate",
    "split_sizes",
]
