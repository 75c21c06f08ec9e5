"""
    SplitMix64 and xoshiro256** random streams.

    Every draw is integer arithmetic on a fixed algorithm, so a seed gives the same
    bits on any platform and numpy version. Normals use Box-Muller, uniforms the top
    53 bits of each output.
"""

from math import ceil

import numpy as np

from .namesnmapper import MASK64, GOLDEN_GAMMA, UNIT_53
from ..errors import SpecError


def check_seed(seed):
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
        raise SpecError("seed must be an integer, got %r" % (seed,))
    if not 0 <= int(seed) <= MASK64:
        raise SpecError("seed must fit in 64 unsigned bits, got %d" % seed)
    return int(seed)


def splitmix64(value):
    z = (int(value) + GOLDEN_GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class Xoshiro256StarStar:
    """
    Seeded stream with the subset of the numpy Generator interface otocsim draws from.
        Args required:
            seed: 64-bit integer; the four state words are the first SplitMix64 outputs
    """

    def __init__(self, seed):
        seed = check_seed(seed)
        self._state = [splitmix64((seed + i * GOLDEN_GAMMA) & MASK64) for i in range(4)]
        if not any(self._state):
            self._state[0] = 1

    @classmethod
    def from_state(cls, words):
        words = [int(w) & MASK64 for w in words]
        if len(words) != 4 or not any(words):
            raise SpecError("xoshiro256** state is four words, not all zero")
        stream = cls.__new__(cls)
        stream._state = words
        return stream

    @property
    def state(self):
        return tuple(self._state)

    def next_uint64(self, count=None):
        """Raw outputs: one int, or a list of `count` ints."""
        n = 1 if count is None else int(count)
        s0, s1, s2, s3 = self._state
        out = [0] * n
        for i in range(n):
            r = (s1 * 5) & MASK64
            out[i] = ((((r << 7) | (r >> 57)) & MASK64) * 9) & MASK64
            t = (s1 << 17) & MASK64
            s2 ^= s0
            s3 ^= s1
            s1 ^= s2
            s0 ^= s3
            s2 ^= t
            s3 = ((s3 << 45) | (s3 >> 19)) & MASK64
        self._state = [s0, s1, s2, s3]
        return out[0] if count is None else out

    def _bits53(self, n):
        return np.array(self.next_uint64(n), dtype=np.uint64) >> np.uint64(11)

    def random(self, size=None):
        """Uniform doubles in [0, 1)."""
        n = 1 if size is None else int(np.prod(size))
        values = self._bits53(n).astype(np.float64) * UNIT_53
        return float(values[0]) if size is None else values.reshape(size)

    def standard_normal(self, size=None):
        """Box-Muller pairs; an odd count drops the last sine."""
        n = 1 if size is None else int(np.prod(size))
        pairs = ceil(n / 2)
        u = self.random(2 * pairs).reshape(pairs, 2)
        radius = np.sqrt(-2.0 * np.log1p(-u[:, 0]))
        angle = 2.0 * np.pi * u[:, 1]
        values = np.stack([radius * np.cos(angle), radius * np.sin(angle)], axis=1).reshape(-1)[:n]
        return float(values[0]) if size is None else values.reshape(size)

    def integers(self, low, high=None, size=None):
        """Uniform integers in [low, high) by the multiply-shift map (no rejection loop)."""
        if high is None:
            low, high = 0, low
        span = int(high) - int(low)
        if span < 1:
            raise SpecError("integers needs high > low, got [%d, %d)" % (low, high))
        n = 1 if size is None else int(np.prod(size))
        values = [int(low) + ((x * span) >> 64) for x in self.next_uint64(n)]
        return values[0] if size is None else np.array(values, dtype=np.int64).reshape(size)

    def binomial(self, n, p):
        """Number of successes in n Bernoulli(p) draws, one uniform per draw."""
        if n < 0 or not 0.0 <= p <= 1.0:
            raise SpecError("binomial needs n >= 0 and p in [0, 1], got (%r, %r)" % (n, p))
        if n == 0:
            return 0
        return int(np.count_nonzero(self._bits53(int(n)).astype(np.float64) * UNIT_53 < p))
