"""Portable deterministic random numbers (SplitMix64).

Every randomized routine in the package draws from this generator so that
identical seeds reproduce identical results on any platform and Python
version.  Stream splitting rule: substream k of master seed s is a SplitMix64
stream whose initial state is mix64(s XOR k*GOLDEN).  Monte Carlo drivers give
trial k its own substream, so results do not depend on scheduling order.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """Finalizer of SplitMix64; a 64-bit bijective scramble."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """64-bit generator with constant-time jump-free substreams."""

    def __init__(self, seed: int):
        self.state = mix64(seed & MASK64)

    @classmethod
    def substream(cls, seed: int, stream: int) -> "SplitMix64":
        return cls((seed ^ (stream * GOLDEN)) & MASK64)

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        return mix64(self.state)

    def uniform(self) -> float:
        """Float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * (2.0 ** -53)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) (rejection-free modulo bias is fine
        at n << 2^64, but use rejection to keep it exactly uniform)."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = MASK64 - (MASK64 % n) - 1
        while True:
            u = self.next_u64()
            if u <= limit:
                return u % n

    def shuffle(self, items: list) -> list:
        """In-place Fisher-Yates; returns the list."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
        return items
