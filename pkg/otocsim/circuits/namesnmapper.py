"""
    Names, defaults and mappers for the circuits subpackage.

"""

from enum import Enum

import numpy as np


class EnsembleType(Enum):
    HAAR_2Q = 'haar-2q'
    FIXED_ENTANGLER = 'fixed-entangler'


class LayerPattern(Enum):
    H_EVEN = 'H-even'
    V_EVEN = 'V-even'
    H_ODD = 'H-odd'
    V_ODD = 'V-odd'


class Direction(Enum):
    FORWARD = 'forward'
    INVERSE = 'inverse'


class PauliLetter(Enum):
    X = 'X'
    Y = 'Y'
    Z = 'Z'


LAYER_CYCLE = [LayerPattern.H_EVEN, LayerPattern.V_EVEN, LayerPattern.H_ODD, LayerPattern.V_ODD]

# (orientation, first offset) per pattern; offsets are 0-based along the paired axis
LAYER_OFFSETS = {
    LayerPattern.H_EVEN: ('H', 0),
    LayerPattern.V_EVEN: ('V', 0),
    LayerPattern.H_ODD: ('H', 1),
    LayerPattern.V_ODD: ('V', 1),
}

DEFAULT_MAX_QUBITS = 26
MAX_QUBITS_ENV = 'OTOC_MAX_QUBITS'
DENSE_MAX_QUBITS = 10
UNITARITY_TOL = 1e-12

CIRCUIT_FORMAT_VERSION = 1

PAULI_MATRICES = {
    PauliLetter.X.value: np.array([[0, 1], [1, 0]], dtype=complex),
    PauliLetter.Y.value: np.array([[0, -1j], [1j, 0]], dtype=complex),
    PauliLetter.Z.value: np.array([[1, 0], [0, -1]], dtype=complex),
}

from . import helperfn as hf

# gate basis index = 2*bit_a + bit_b
ENTANGLER_MAPPER = {
    'iswap': hf.fsim_gate(np.pi / 2, 0.0),
    'sqrt-iswap': hf.fsim_gate(np.pi / 4, 0.0),
    'sycamore': hf.fsim_gate(np.pi / 2, np.pi / 6),
    'cz': np.diag([1, 1, 1, -1]).astype(complex),
}
