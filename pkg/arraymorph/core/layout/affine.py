import math
from dataclasses import dataclass

from arraymorph.core.errors import IndexOutOfRangeError, InvalidExtentError, InvalidMapError

FIRST_MULTIPLIER = 3


@dataclass(frozen=True)
class AffineMap:
    """
    Index permutation i -> (k*i + b) mod n.

    A map is only usable for obfuscation when it is a bijection on [0, n),
    which holds iff gcd(k, n) == 1 (see ``affine_valid``).
    """

    k: int
    b: int
    n: int

    def __post_init__(self):
        if self.k < 1 or self.b < 0 or self.n < 1:
            raise InvalidExtentError(
                f"Affine map needs k >= 1, b >= 0, n >= 1; got k={self.k}, b={self.b}, n={self.n}"
            )


def affine_index(i: int, amap: AffineMap) -> int:
    """Image of index ``i`` under ``amap``."""
    if not 0 <= i < amap.n:
        raise IndexOutOfRangeError(f"index {i} out of range [0, {amap.n})")
    return (amap.k * i + amap.b) % amap.n


def affine_valid(amap: AffineMap) -> bool:
    """Whether ``amap`` permutes [0, n)."""
    return math.gcd(amap.k, amap.n) == 1


def affine_inverse(amap: AffineMap) -> AffineMap:
    """
    Map undoing ``amap``: affine_index(affine_index(i, m), inverse) == i.

    Raises:
        InvalidMapError: If ``amap`` is not a permutation
    """
    if not affine_valid(amap):
        raise InvalidMapError(
            f"k={amap.k} shares a factor with n={amap.n}; the map is not invertible"
        )
    if amap.n == 1:
        return AffineMap(1, 0, 1)
    k_inv = pow(amap.k, -1, amap.n)
    return AffineMap(k_inv, (-k_inv * amap.b) % amap.n, amap.n)


def choose_multiplier(n: int) -> int:
    """
    Smallest odd k >= 3 coprime to ``n``.

    Such a k is always prime: any odd prime factor of it would be a smaller
    candidate. The emitted classes pick k the same way at construction time.
    """
    if n < 1:
        raise InvalidExtentError(f"Array length must be at least 1, got {n}")
    k = FIRST_MULTIPLIER
    while math.gcd(k, n) != 1:
        k += 2
    return k


def index_map_for(n: int, offset: int) -> AffineMap:
    """The permutation an obscured class of length ``n`` applies."""
    return AffineMap(choose_multiplier(n), offset, n)
