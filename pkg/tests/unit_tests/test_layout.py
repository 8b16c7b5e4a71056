import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from arraymorph.core.errors import IndexOutOfRangeError, InvalidExtentError, InvalidMapError
from arraymorph.core.layout import (
    AffineMap,
    Dim2,
    Half,
    MergeSource,
    SplitLocation,
    affine_index,
    affine_inverse,
    affine_valid,
    choose_multiplier,
    flatten_locate,
    fold_dims,
    fold_locate,
    index_map_for,
    merge_locate,
    merge_sizes,
    split_locate,
    split_sizes,
)


class TestSplit:
    def test_sizes(self):
        assert split_sizes(23) == (12, 11)
        assert split_sizes(100000) == (50000, 50000)
        assert split_sizes(1) == (1, 0)

    def test_locate(self):
        assert split_locate(0, 23) == SplitLocation(Half.FIRST, 0)
        assert split_locate(7, 23) == SplitLocation(Half.SECOND, 3)
        assert split_locate(22, 23) == SplitLocation(Half.FIRST, 11)

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRangeError):
            split_locate(23, 23)
        with pytest.raises(IndexOutOfRangeError):
            split_locate(-1, 23)

    def test_zero_size_rejected(self):
        with pytest.raises(InvalidExtentError):
            split_sizes(0)

    @given(st.integers(min_value=1, max_value=400))
    def test_bijection(self, size):
        first_len, second_len = split_sizes(size)
        slots = {split_locate(pos, size) for pos in range(size)}
        assert len(slots) == size
        assert all(
            s.offset < (first_len if s.half is Half.FIRST else second_len) for s in slots
        )


class TestMerge:
    def test_interleaves_then_continues_longer(self):
        assert merge_sizes(2, 4) == 6
        located = [merge_locate(pos, 2, 4) for pos in range(6)]
        assert located == [
            (MergeSource.A, 0),
            (MergeSource.B, 0),
            (MergeSource.A, 1),
            (MergeSource.B, 1),
            (MergeSource.B, 2),
            (MergeSource.B, 3),
        ]

    def test_empty_input(self):
        assert merge_sizes(0, 3) == 3
        assert merge_locate(2, 0, 3) == (MergeSource.B, 2)

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRangeError):
            merge_locate(5, 2, 3)

    @given(st.integers(0, 30), st.integers(0, 30))
    def test_bijection(self, len_a, len_b):
        hits = {merge_locate(pos, len_a, len_b) for pos in range(merge_sizes(len_a, len_b))}
        assert hits == {(MergeSource.A, i) for i in range(len_a)} | {
            (MergeSource.B, i) for i in range(len_b)
        }


class TestFoldFlatten:
    def test_fold_dims_near_square(self):
        assert fold_dims(100000) == Dim2(316, 317)
        assert fold_dims(10) == Dim2(3, 4)
        assert fold_dims(16) == Dim2(4, 4)
        assert fold_dims(1) == Dim2(1, 1)

    def test_fold_dims_hint(self):
        assert fold_dims(10, cols_hint=3) == Dim2(4, 3)
        with pytest.raises(InvalidExtentError):
            fold_dims(10, cols_hint=0)

    def test_fold_locate(self):
        dims = Dim2(3, 4)
        assert fold_locate(0, dims) == (0, 0)
        assert fold_locate(9, dims) == (2, 1)
        with pytest.raises(IndexOutOfRangeError):
            fold_locate(12, dims)

    def test_flatten_locate(self):
        dims = Dim2(500, 200)
        assert flatten_locate(0, 0, dims) == 0
        assert flatten_locate(499, 199, dims) == 99999
        with pytest.raises(IndexOutOfRangeError):
            flatten_locate(0, 200, dims)
        with pytest.raises(IndexOutOfRangeError):
            flatten_locate(500, 0, dims)

    def test_bad_dims(self):
        with pytest.raises(InvalidExtentError):
            Dim2(0, 3)

    @given(st.integers(1, 300), st.integers(1, 300), st.data())
    def test_mutual_inverse(self, rows, cols, data):
        dims = Dim2(rows, cols)
        pos = data.draw(st.integers(0, dims.cells - 1))
        assert flatten_locate(*fold_locate(pos, dims), dims) == pos


class TestAffine:
    def test_k3_permutes_100(self):
        amap = AffineMap(3, 0, 100)
        assert affine_valid(amap)
        assert sorted(affine_index(i, amap) for i in range(100)) == list(range(100))
        assert affine_index(34, amap) == 2

    def test_k2_rejected(self):
        amap = AffineMap(2, 0, 100)
        assert not affine_valid(amap)
        with pytest.raises(InvalidMapError):
            affine_inverse(amap)

    def test_inverse_of_k3(self):
        inverse = affine_inverse(AffineMap(3, 5, 100))
        assert inverse == AffineMap(67, 65, 100)

    def test_single_element(self):
        assert affine_inverse(AffineMap(4, 0, 1)) == AffineMap(1, 0, 1)

    def test_index_out_of_range(self):
        with pytest.raises(IndexOutOfRangeError):
            affine_index(100, AffineMap(3, 0, 100))

    def test_choose_multiplier(self):
        assert choose_multiplier(100) == 3
        assert choose_multiplier(3) == 5
        assert choose_multiplier(15) == 7
        assert choose_multiplier(1) == 3
        assert index_map_for(100, 7) == AffineMap(3, 7, 100)

    @given(st.integers(1, 500), st.integers(1, 2000), st.integers(0, 10**6))
    def test_inverse_composes_to_identity(self, n, k, b):
        assume(math.gcd(k, n) == 1)
        amap = AffineMap(k, b % n, n)
        inverse = affine_inverse(amap)
        for i in range(n):
            assert affine_index(affine_index(i, amap), inverse) == i

    @given(st.integers(1, 10**6))
    def test_chosen_multiplier_is_valid_prime(self, n):
        k = choose_multiplier(n)
        assert math.gcd(k, n) == 1
        assert all(k % d for d in range(2, math.isqrt(k) + 1))
