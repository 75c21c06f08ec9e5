"""
    Names for the random streams used across otocsim.

"""

from enum import Enum


class StreamKind(Enum):
    TWO_QUBIT = 0
    SINGLE_QUBIT = 1
    SHOTS = 2
    TRACE = 3


MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15

# spacing of the 53-bit uniform grid on [0, 1)
UNIT_53 = 2.0 ** -53
