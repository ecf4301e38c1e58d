"""Deterministic pseudo-random numbers for seeded circuit generation.

All randomness in this package flows through SplitMix64 (Steele, Lea &
Flood's mix function with a Weyl sequence step).  The generator is a few
integer operations, so identical seeds give identical streams on every
platform and Python version; OS entropy is never consulted.
"""

from __future__ import annotations

import math

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15

# Shared default for every seeded entry point (CLI, service, sweeps).
DEFAULT_SEED = 42


def _mix64(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def derive_seed(seed: int, stream: int) -> int:
    """Deterministic sub-seed for independent stream `stream` of `seed`."""
    return _mix64((seed + stream * _GAMMA) & _MASK64)


class SplitMix64:
    """Tiny 64-bit PRNG with a guaranteed-stable output stream."""

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        return _mix64(self._state)

    def randrange(self, n: int) -> int:
        """Uniform integer in [0, n). Rejection sampling keeps it unbiased."""
        if n <= 0:
            raise ValueError("randrange needs a positive bound")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % n

    def random(self) -> float:
        # 53 random bits, the full precision of a float in [0, 1).
        return (self.next_u64() >> 11) * (2.0**-53)

    def angle(self) -> float:
        """Uniform rotation angle in [0, 2*pi)."""
        return self.random() * math.tau

    def choice(self, items: list):
        return items[self.randrange(len(items))]

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample_distinct(self, n: int, k: int) -> tuple[int, ...]:
        """Ordered sample of k distinct integers from range(n)."""
        if k > n:
            raise ValueError(f"cannot draw {k} distinct values from {n}")
        pool = list(range(n))
        out = []
        for i in range(k):
            j = i + self.randrange(n - i)
            pool[i], pool[j] = pool[j], pool[i]
            out.append(pool[i])
        return tuple(out)
