"""Seedable deterministic pseudo-random generator used wherever the toolchain
needs randomness.

The algorithm is SplitMix64 (Steele, Lea & Flood's SplittableRandom mixer): a
64-bit counter advanced by the golden-ratio constant, pushed through two
xor-shift-multiply rounds. All arithmetic is modulo 2**64:

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    output = z ^ (z >> 31)

It was chosen because it is a few lines in any language, which keeps
generated standalone programs on exactly the same documented stream. One
seed, one stream: the same seed always reproduces the same run bit for bit.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform float in [0, 1): the top 53 bits scaled by 2**-53."""
        return (self.next_u64() >> 11) * 2.0 ** -53

    def randbelow(self, n: int) -> int:
        """Uniform int in [0, n) by modulo reduction.

        The modulo bias is on the order of n / 2**64; irrelevant for the
        small ranges used here.
        """
        return self.next_u64() % n
