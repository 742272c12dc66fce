"""Deterministic 64-bit random number generation.

All randomized code in this package draws from :class:`SplitMix64`, a tiny
mixing generator specified entirely by its constants, so that identical seeds
produce identical streams on every platform and in every language that
reimplements it.  The recurrence: the state advances by the 64-bit golden
ratio increment 0x9E3779B97F4A7C15, and each output is the state passed
through two xor-shift-multiply rounds (multipliers 0xBF58476D1CE4E5B9 and
0x94D049BB133111EB) and a final 31-bit xor-shift.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """Deterministic uniform generator over 64-bit integers."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n), exact via rejection sampling."""
        if n <= 0:
            raise ValueError("below() requires n >= 1")
        if n & (n - 1) == 0:
            return self.next_u64() & (n - 1)
        limit = _MASK64 + 1 - ((_MASK64 + 1) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], inclusive on both ends."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.below(hi - lo + 1)

    def uniform01(self) -> float:
        """Uniform float in [0, 1) with 53 bits of precision."""
        return (self.next_u64() >> 11) * 2.0**-53

    def nonempty_mask(self, width: int) -> int:
        """Uniform nonempty subset of {0..width-1}, as a bitmask in [1, 2^width - 1]."""
        if width < 1:
            raise ValueError("need at least one element to form a nonempty subset")
        return self.randint(1, (1 << width) - 1)

    def mask(self, width: int) -> int:
        """Uniform subset of {0..width-1} (the empty set included)."""
        if width < 0:
            raise ValueError("negative width")
        return self.below(1 << width)
