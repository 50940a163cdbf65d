"""Seedable random streams shared by the pure-Python and compiled kernels.

The generator is SplitMix64. It was chosen over ``random.Random`` because
the compiled kernel re-implements it in C with identical 64-bit arithmetic,
so both backends draw byte-identical streams and a run is reproducible
regardless of which kernel is active.

Stream splitting: every consumer derives an independent stream seed with
``stream_seed(seed, kind, a, b)``. The solver uses

* ``stream_seed(seed, ANT_STREAM, t, k)`` for ant ``k`` of iteration ``t``
  (this is what makes ant construction order-independent), and
* ``stream_seed(seed, UPDATE_STREAM, 0, 0)`` for the serialized pheromone
  update phase (the r1, r2 draws of the velocity rule).
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

#: 2**-53, the spacing of doubles in [0.5, 1); used to map 53 bits -> [0, 1).
_INV_2_53 = 1.0 / 9007199254740992.0

ANT_STREAM = 1
UPDATE_STREAM = 2


def mix64(z: int) -> int:
    """SplitMix64 output scrambler (Stafford variant 13)."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * _MIX1) & MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & MASK64
    return z ^ (z >> 31)


def stream_seed(seed: int, kind: int, a: int = 0, b: int = 0) -> int:
    """Derive the seed of an independent substream.

    Mirrored in the compiled kernel; do not change without updating
    ``_kernel.pyx``.
    """
    x = mix64((seed & MASK64) ^ _GOLDEN)
    for tag in (kind, a, b):
        x = mix64(x ^ ((tag & MASK64) * _MIX1 & MASK64))
    return x


class SplitMix64:
    """Minimal deterministic generator: 64-bit state, 2**64 period."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & MASK64
        return mix64(self.state)

    def random(self) -> float:
        """Uniform double in [0, 1), from the top 53 bits."""
        return (self.next_u64() >> 11) * _INV_2_53

    def randbelow(self, n: int) -> int:
        """Uniform int in [0, n). Requires 0 < n << 2**53."""
        return int(self.random() * n)
