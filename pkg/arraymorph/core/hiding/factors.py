from dataclasses import dataclass

# (n1, n2) pairs of the F helper, in chain order. Each pair's sum is the
# next pair's n1, and the first sum is 5. The pairs were meant to have
# prime sums; 95 and 767 are not, so the values themselves are normative.
FACTOR_PAIRS: tuple[tuple[int, int], ...] = (
    (2, 3),
    (5, 6),
    (11, 12),
    (23, 24),
    (47, 48),
    (95, 96),
    (191, 192),
    (383, 384),
    (767, 768),
    (1535, 1536),
    (3071, 3072),
    (6143, 6144),
    (12287, 12288),
)


@dataclass(frozen=True)
class FactorTable:
    """Ordered modulus pairs folded over by the F helper."""

    pairs: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def sums(self) -> tuple[int, ...]:
        """Modulus applied at each chain step (1-based step i uses sums[i-1])."""
        return tuple(n1 + n2 for n1, n2 in self.pairs)

    @property
    def firsts(self) -> tuple[int, ...]:
        """First element of each pair; the candidates for a surface modulus."""
        return tuple(n1 for n1, _ in self.pairs)


_TABLE = FactorTable(FACTOR_PAIRS)


def factor_table() -> FactorTable:
    return _TABLE
