"""SplitMix64 generator and seeded permutations.

Every random assignment in the game is derived from a 64-bit session seed
through this module, so two implementations that agree on these few lines
agree on every mapping. SplitMix64 is the published generator (Steele, Lea
& Flood 2014); its one-step output on state 0 is 0xE220A8397B1DCDAF, which
the tests pin.

Sub-seeding scheme: the generator that drives a particular shuffle is
seeded with one SplitMix64 step on (session_seed XOR domain_constant).
Domain constants live in `mappings`, one per kind of assignment, so the
color map, segment maps and reference sequence are independent streams.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    """Deterministic 64-bit generator with a single u64 of state."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return (z ^ (z >> 31)) & _MASK64

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound). Plain modulo: the bias for any
        bound <= 2**16 is under 2**-48 and bounds here are powers of two."""
        return self.next_u64() % bound

    def unit(self) -> float:
        """Uniform float in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * (2.0 ** -53)


def subseed(seed: int, domain: int) -> int:
    """One SplitMix64 step on (seed XOR domain): the sub-stream seed."""
    return SplitMix64(seed ^ domain).next_u64()


def seeded_permutation(n: int, sub_seed: int, base: int = 0) -> list[int]:
    """Fisher-Yates shuffle of [base, base+n) driven by SplitMix64(sub_seed).

    Descending form: for i from n-1 down to 1, swap i with
    next_u64() % (i + 1). Byte-reproducible across runs and languages.
    """
    rng = SplitMix64(sub_seed)
    items = list(range(base, base + n))
    for i in range(n - 1, 0, -1):
        j = rng.below(i + 1)
        items[i], items[j] = items[j], items[i]
    return items
