"""
    Seed derivation.

    Instance seeds come from a SplitMix64 stream over the master seed so instance i
    can be regenerated alone. Every gate, shot and trace stream is a xoshiro256**
    stream seeded with SplitMix64(seed ^ hash(key)), where the key names the position
    (layer, slot, kind), so the draw for a slot never depends on evaluation order.
"""

from .namesnmapper import MASK64, GOLDEN_GAMMA, StreamKind
from ..errors import SpecError
from .streams import Xoshiro256StarStar, check_seed, splitmix64

__all__ = ['check_seed', 'splitmix64', 'instance_seed', 'key_hash', 'stream_seed', 'substream']


def instance_seed(master_seed, index):
    """index-th output of the SplitMix64 stream started at master_seed."""
    return splitmix64((check_seed(master_seed) + int(index) * GOLDEN_GAMMA) & MASK64)


def key_hash(*key):
    """SplitMix64 chained over the key parts; the part count is mixed in first so (1,) and (1, 0) differ."""
    value = splitmix64(len(key))
    for part in key:
        part = part.value if isinstance(part, StreamKind) else int(part)
        if part < 0:
            raise SpecError("stream key parts must be non-negative, got %d" % part)
        value = splitmix64(value ^ (part & MASK64))
    return value


def stream_seed(seed, *key):
    return splitmix64(check_seed(seed) ^ key_hash(*key))


def substream(seed, *key):
    """
    Independent generator for a position in a seeded computation.
        Args required:
            seed: 64-bit integer seed of the circuit or instance
            key: non-negative integers, e.g. (layer, slot, StreamKind.TWO_QUBIT)
    """
    return Xoshiro256StarStar(stream_seed(seed, *key))
