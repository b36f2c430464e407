"""Reproducible instance generators.

Randomness comes from SplitMix64 (Steele, Lea and Flood), a 64-bit
counter-based generator that is a few lines in any language.  Bounded draws
use rejection sampling on the top of the range, so a port that follows the
same steps reproduces every instance exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .intervals import IntervalSystem, normalize

MASK64 = (1 << 64) - 1
MODELS = ("uniform_matching", "crossing_clique", "nested_chain", "blocks")


class SplitMix64:
    def __init__(self, seed: int) -> None:
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)``."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound

    def shuffle(self, items: list) -> None:
        """Fisher-Yates, swapping position ``i`` with a draw from ``[0, i]``, high to low."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def derive_seed(seed: int, index: int) -> int:
    """Seed of the ``index``-th instance in a batch started from ``seed``."""
    return SplitMix64((seed + index * 0x9E3779B97F4A7C15) & MASK64).next_u64()


@dataclass(frozen=True)
class GenSpec:
    model: str
    n: int
    seed: int = 0

    def build(self) -> IntervalSystem:
        if self.model == "uniform_matching":
            return gen_uniform_matching(self.n, self.seed)
        if self.model == "crossing_clique":
            return gen_crossing_clique(self.n)
        if self.model == "nested_chain":
            return gen_nested_chain(self.n)
        if self.model == "blocks":
            return gen_blocks(self.n, self.seed)
        raise ValueError(f"unknown model {self.model!r}; choose from {', '.join(MODELS)}")


def _random_pairs(points: list[int], rng: SplitMix64) -> list[tuple[int, int]]:
    rng.shuffle(points)
    return [tuple(sorted(points[t : t + 2])) for t in range(0, len(points), 2)]


def gen_uniform_matching(n: int, seed: int) -> IntervalSystem:
    """A uniformly random perfect matching of the points ``1..2n``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return normalize(_random_pairs(list(range(1, 2 * n + 1)), SplitMix64(seed)))


def gen_crossing_clique(k: int) -> IntervalSystem:
    """``k`` pairwise crossing intervals ``(i, k + i)``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return normalize([(i, k + i) for i in range(1, k + 1)])


def gen_nested_chain(k: int) -> IntervalSystem:
    """``k`` nested intervals ``(i, 2k + 1 - i)``; no two overlap."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return normalize([(i, 2 * k + 1 - i) for i in range(1, k + 1)])


def gen_blocks(n: int, seed: int, max_block: int = 8) -> IntervalSystem:
    """Side-by-side random matchings of 1..max_block intervals each, ``n`` in total."""
    if n < 0:
        raise ValueError("n must be non-negative")
    rng = SplitMix64(seed)
    pairs: list[tuple[int, int]] = []
    base = 0
    left = n
    while left:
        size = 1 + rng.below(min(max_block, left))
        pairs += _random_pairs(list(range(base + 1, base + 2 * size + 1)), rng)
        base += 2 * size
        left -= size
    return normalize(pairs)


def generate(model: str, n: int, seed: int = 0) -> IntervalSystem:
    return GenSpec(model, n, seed).build()
