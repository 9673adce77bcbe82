"""SplitMix64, the only randomness source of the simulator.

Reproducibility rule (language independent):

* ``splitmix64`` keeps a 64-bit state ``s``. Each draw sets
  ``s = (s + 0x9E3779B97F4A7C15) mod 2**64`` and returns ``mix(s)`` where::

      z = s
      z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
      z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2**64
      mix(s) = z ^ (z >> 31)

* walk ``i`` (0-based) of a run with master seed ``S`` is seeded with
  ``walk_seed(S, i) = mix((S + (i + 1) * 0x9E3779B97F4A7C15) mod 2**64)``,
  i.e. the ``(i+1)``-th output of a SplitMix64 stream started at ``S``;
  the walk then draws from its own SplitMix64 stream with state
  ``walk_seed(S, i)``.
* ``below(n)`` draws ``x`` and rejects while ``x < (2**64 - n) mod n``;
  it returns ``x mod n``. Rejection removes modulo bias exactly.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def walk_seed(master_seed: int, walk_index: int) -> int:
    return mix64((master_seed + (walk_index + 1) * GOLDEN_GAMMA) & MASK64)


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        if not 0 <= seed <= MASK64:
            raise ValueError(f"seed must fit in 64 unsigned bits, got {seed}")
        self.state = seed

    def next(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        return mix64(self.state)

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)`` without modulo bias."""
        if n <= 0:
            raise ValueError("n must be positive")
        threshold = (MASK64 + 1 - n) % n
        while True:
            x = self.next()
            if x >= threshold:
                return x % n
