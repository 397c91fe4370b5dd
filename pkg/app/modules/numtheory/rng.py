"""Seeded randomness threaded explicitly through the solvers."""

import random

SEED_MASK = (1 << 64) - 1
SPAWN_MULTIPLIER = 1_000_003


class RandomSource:
    """Deterministic stream of uniform integers from a 64-bit seed.

    Instances are not shared between threads; concurrent callers take their own
    source via `spawn`.
    """

    def __init__(self, seed: int = 0):
        self.seed = seed & SEED_MASK
        self._random = random.Random(self.seed)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi]."""
        return self._random.randint(lo, hi)

    def randbelow(self, n: int) -> int:
        return self._random.randrange(n)

    def getrandbits(self, bits: int) -> int:
        return self._random.getrandbits(bits)

    def spawn(self, index: int) -> "RandomSource":
        """Independent child source for trial `index`, stable across runs."""
        return RandomSource((self.seed * SPAWN_MULTIPLIER + index) & SEED_MASK)

    def __repr__(self) -> str:
        return f"RandomSource(seed={self.seed})"
