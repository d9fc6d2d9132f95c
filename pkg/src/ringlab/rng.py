"""Deterministic pseudo-random stream used wherever outputs must be
bit-reproducible across platforms and Python versions.

SplitMix64 with rejection-free modular draw. The scheme identifier is
recorded in every randomized report so a run can be replayed exactly.
"""
from __future__ import annotations

MASK64 = (1 << 64) - 1
SCHEME_ID = "splitmix64-mod-v1"


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randrange(self, n: int) -> int:
        """Uniform-enough draw in [0, n); modular, documented as such."""
        if n <= 0:
            raise ValueError("randrange needs a positive bound")
        return self.next_u64() % n

    def fork(self) -> "SplitMix64":
        """Independent child stream; advances this one."""
        return SplitMix64(self.next_u64())
