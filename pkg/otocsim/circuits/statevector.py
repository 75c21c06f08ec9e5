"""
    Dense statevector engine.

    Convention: qubit q is bit q of the basis-state integer (little-endian). In the
    (2,)*n tensor view of the amplitudes qubit q therefore lives on axis n-1-q.
    Two-qubit gates are indexed by 2*bit_a + bit_b.

    Kernels mutate the state in place; use StateVector.copy() to keep a snapshot.
"""

import logging
import os
import struct

import numpy as np

from .namesnmapper import (Direction, DEFAULT_MAX_QUBITS, MAX_QUBITS_ENV, DENSE_MAX_QUBITS, PauliLetter,
                           PAULI_MATRICES)
from ..errors import SpecError, QubitLimitError, FormatError

logger = logging.getLogger(__name__)

_BYTES_PER_AMPLITUDE = 16


def max_qubits(override=None):
    """Memory guard: explicit override, else $OTOC_MAX_QUBITS, else 26."""
    if override is not None:
        return int(override)
    env = os.environ.get(MAX_QUBITS_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise SpecError("%s must be an integer, got %r" % (MAX_QUBITS_ENV, env))
    return DEFAULT_MAX_QUBITS


def check_qubit_limit(n, override=None):
    limit = max_qubits(override)
    if n > limit:
        gib = (2 ** n) * _BYTES_PER_AMPLITUDE / 2 ** 30
        raise QubitLimitError("n=%d qubits needs 2^%d amplitudes (%.1f GiB), above the %d-qubit guard; "
                              "raise it with --max-qubits or %s" % (n, n, gib, limit, MAX_QUBITS_ENV))
    return limit


class StateVector:
    """
    2^n complex amplitudes.
        Args required:
            n_qubits: (Integer) number of qubits
            amplitudes: 1-D complex128 array of length 2^n
    """

    def __init__(self, n_qubits, amplitudes):
        amplitudes = np.ascontiguousarray(amplitudes, dtype=np.complex128)
        if amplitudes.shape != (2 ** n_qubits,):
            raise SpecError("expected %d amplitudes for %d qubits, got shape %s"
                            % (2 ** n_qubits, n_qubits, amplitudes.shape))
        self.n_qubits = int(n_qubits)
        self.amplitudes = amplitudes

    @property
    def tensor(self):
        return self.amplitudes.reshape((2,) * self.n_qubits)

    def copy(self):
        return StateVector(self.n_qubits, self.amplitudes.copy())

    def norm_squared(self):
        return float(np.sum(np.abs(self.amplitudes) ** 2))

    def __len__(self):
        return self.amplitudes.shape[0]


def zero_state(n, max_qubits=None):
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise SpecError("number of qubits must be a positive integer, got %r" % (n,))
    check_qubit_limit(n, max_qubits)
    amplitudes = np.zeros(2 ** n, dtype=np.complex128)
    amplitudes[0] = 1.0
    return StateVector(n, amplitudes)


def basis_state(n, index, max_qubits=None):
    state = zero_state(n, max_qubits)
    if not 0 <= index < 2 ** n:
        raise SpecError("basis index %d outside [0, 2^%d)" % (index, n))
    state.amplitudes[0] = 0.0
    state.amplitudes[index] = 1.0
    return state


def _check_site(state, site):
    if isinstance(site, bool) or not isinstance(site, (int, np.integer)) or not 0 <= site < state.n_qubits:
        raise SpecError("qubit %r out of range for %d qubits" % (site, state.n_qubits))


def _axis(state, site):
    return state.n_qubits - 1 - site


def apply_single_qubit_gate(state, u, a):
    _check_site(state, a)
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2):
        raise SpecError("single-qubit gate must be 2x2, got %s" % (u.shape,))
    ax = _axis(state, a)
    out = np.tensordot(u, state.tensor, axes=([1], [ax]))
    state.amplitudes[:] = np.moveaxis(out, 0, ax).reshape(-1)
    return state


def apply_two_qubit_gate(state, gate, a, b):
    _check_site(state, a)
    _check_site(state, b)
    if a == b:
        raise SpecError("two-qubit gate needs distinct qubits, got %d twice" % a)
    gate = np.asarray(gate, dtype=complex)
    if gate.shape != (4, 4):
        raise SpecError("two-qubit gate must be 4x4, got %s" % (gate.shape,))
    ax_a, ax_b = _axis(state, a), _axis(state, b)
    # g[out_a, out_b, in_a, in_b]
    g = gate.reshape(2, 2, 2, 2)
    out = np.tensordot(g, state.tensor, axes=([2, 3], [ax_a, ax_b]))
    state.amplitudes[:] = np.moveaxis(out, [0, 1], [ax_a, ax_b]).reshape(-1)
    return state


def apply_pauli_string(state, pauli):
    """X flips the bit, Z multiplies by (-1)^bit, Y = i*X*Z per site."""
    pauli.check_range(state.n_qubits)
    psi = state.tensor
    phase = 1
    for site, letter in pauli.terms:
        ax = _axis(state, site)
        zero = (slice(None),) * ax + (0,)
        one = (slice(None),) * ax + (1,)
        if letter in (PauliLetter.Z.value, PauliLetter.Y.value):
            psi[one] *= -1
        if letter in (PauliLetter.X.value, PauliLetter.Y.value):
            flipped = psi[zero].copy()
            psi[zero] = psi[one]
            psi[one] = flipped
        if letter == PauliLetter.Y.value:
            phase *= 1j
    if phase != 1:
        state.amplitudes *= phase
    return state


def apply_circuit(state, circuit, direction=Direction.FORWARD):
    """
    Applies U (forward) or U^dagger (inverse). The inverse runs layers and the ops
    inside each layer in reverse order with conjugate-transposed gates.
    """
    direction = Direction(direction)
    if circuit.n_qubits != state.n_qubits:
        raise SpecError("circuit acts on %d qubits but the state has %d" % (circuit.n_qubits, state.n_qubits))
    if direction == Direction.FORWARD:
        for layer in circuit.layers:
            for op in layer.singles:
                apply_single_qubit_gate(state, op.gate, op.site)
            for op in layer.ops:
                apply_two_qubit_gate(state, op.gate, op.a, op.b)
    else:
        for layer in reversed(circuit.layers):
            for op in reversed(layer.ops):
                apply_two_qubit_gate(state, op.gate.conj().T, op.a, op.b)
            for op in reversed(layer.singles):
                apply_single_qubit_gate(state, op.gate.conj().T, op.site)
    return state


def inner_product(a, b):
    """<a|b>, conjugate-linear in a. np.sum reduces pairwise so the result is thread-count independent."""
    if a.n_qubits != b.n_qubits:
        raise SpecError("inner product of %d- and %d-qubit states" % (a.n_qubits, b.n_qubits))
    return complex(np.sum(np.conj(a.amplitudes) * b.amplitudes))


def pauli_expectation(state, pauli):
    value = inner_product(state, apply_pauli_string(state.copy(), pauli))
    assert abs(value.imag) < 1e-10, "Pauli expectation has imaginary part %g" % value.imag
    return value.real


def dense_unitary(circuit):
    """Full 2^n x 2^n matrix of the circuit, column x = U|x>; verification oracle for n <= 10."""
    n = circuit.n_qubits
    if n > DENSE_MAX_QUBITS:
        raise SpecError("dense_unitary supports at most %d qubits, got %d" % (DENSE_MAX_QUBITS, n))
    dim = 2 ** n
    matrix = np.empty((dim, dim), dtype=np.complex128)
    for x in range(dim):
        column = basis_state(n, x)
        matrix[:, x] = apply_circuit(column, circuit).amplitudes
    return matrix


def pauli_matrix(pauli, n):
    """Dense matrix of a Pauli string on n qubits (oracle use, small n)."""
    if n > DENSE_MAX_QUBITS:
        raise SpecError("pauli_matrix supports at most %d qubits, got %d" % (DENSE_MAX_QUBITS, n))
    letters = pauli.as_dict()
    matrix = np.ones((1, 1), dtype=complex)
    # kron builds big-endian, so the highest qubit goes first
    for site in reversed(range(n)):
        factor = PAULI_MATRICES[letters[site]] if site in letters else np.eye(2, dtype=complex)
        matrix = np.kron(matrix, factor)
    return matrix


def dump_state(state, path):
    """Debug dump: little-endian uint64 qubit count, then 2^n (re, im) float64 pairs."""
    with open(path, 'wb') as handle:
        handle.write(struct.pack('<Q', state.n_qubits))
        handle.write(state.amplitudes.astype('<c16').tobytes())


def load_state(path):
    with open(path, 'rb') as handle:
        header = handle.read(8)
        if len(header) != 8:
            raise FormatError("%s: missing 8-byte qubit-count header" % path)
        (n,) = struct.unpack('<Q', header)
        payload = handle.read()
    if n < 1 or n > 62 or len(payload) != (2 ** n) * _BYTES_PER_AMPLITUDE:
        raise FormatError("%s: header says %d qubits but payload has %d bytes" % (path, n, len(payload)))
    return StateVector(n, np.frombuffer(payload, dtype='<c16').astype(np.complex128))
