"""Seeded random-subset models: Bernoulli, uniform fixed-size, symmetrized.

The generator is a fixed SplitMix64 stream, not a platform default, so that
subsets are bit-identical across platforms, runs and execution orders.  The
construction:

* state advances by the golden-ratio increment 0x9E3779B97F4A7C15 mod 2^64;
* each output is the finalizer z ^= z>>30; z *= 0xBF58476D1CE4E5B9;
  z ^= z>>27; z *= 0x94D049BB133111EB; z ^= z>>31 applied to the new state;
* sub-streams derive by absorbing integer components one at a time:
  state <- mix64(state XOR (component * 0x9E3779B97F4A7C15)), so trial i of
  an experiment owns the stream derived from (base_seed, N, i) regardless of
  the order trials execute in.

Element draws always consume the stream in ascending element-index order.
"""

from __future__ import annotations

from .groups import FiniteGroup
from .setsystem import Subset

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix64(z: int) -> int:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK64
    return z ^ (z >> 31)


class SeededRng:
    """SplitMix64 stream; identical seed gives identical output everywhere."""

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        return _mix64(self._state)

    def random(self) -> float:
        """Uniform in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * 2.0**-53

    def randbelow(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection, bias-free."""
        if n <= 0:
            raise ValueError(f"randbelow needs n >= 1, got {n}")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            v = self.next_u64()
            if v < limit:
                return v % n


def derive_rng(base_seed: int, *parts: int) -> SeededRng:
    """Sub-stream for (base_seed, part_1, part_2, ...)."""
    state = base_seed & _MASK64
    for part in parts:
        state = _mix64(state ^ (part * _GOLDEN & _MASK64))
    return SeededRng(state)


def bernoulli_subset(g: FiniteGroup, p: float, rng: SeededRng) -> Subset:
    """Each element included independently with probability p.

    One draw per element in ascending index order, so the subset is a pure
    function of the rng state.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"inclusion probability must be in [0,1], got {p}")
    bits = 0
    for x in range(g.order):
        if rng.random() < p:
            bits |= 1 << x
    return Subset(bits, g.order)


def uniform_fixed_size(g: FiniteGroup, d: int, rng: SeededRng) -> Subset:
    """Uniform over all C(N, d) subsets of cardinality d (partial Fisher-Yates)."""
    n = g.order
    if not 0 <= d <= n:
        raise ValueError(f"subset size {d} outside [0,{n}]")
    pool = list(range(n))
    bits = 0
    for i in range(d):
        j = i + rng.randbelow(n - i)
        pool[i], pool[j] = pool[j], pool[i]
        bits |= 1 << pool[i]
    return Subset(bits, n)


def symmetrize(g: FiniteGroup, a: Subset) -> Subset:
    """A union A^-1, the symmetric generating set of Remark-style models."""
    if a.size != g.order:
        raise ValueError(f"set sized {a.size} does not match group order {g.order}")
    bits = a.bits
    for x in a:
        bits |= 1 << g.inv(x)
    return Subset(bits, g.order)
