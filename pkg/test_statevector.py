"""
    Statevector kernels against explicit matrices.

"""
import os
import tempfile
import unittest
from unittest import mock

import numpy as np

from otocsim.circuits.ensemble import (GridGeometry, EnsembleSpec, sample_circuit, sample_haar_unitary,
                                      resolve_entangler)
from otocsim.circuits.namesnmapper import Direction, EnsembleType
from otocsim.circuits.paulis import PauliString
from otocsim.circuits.statevector import (StateVector, zero_state, basis_state, apply_single_qubit_gate,
                                          apply_two_qubit_gate, apply_pauli_string, apply_circuit, inner_product,
                                          pauli_expectation, dense_unitary, pauli_matrix, max_qubits,
                                          check_qubit_limit, dump_state, load_state)
from otocsim.errors import SpecError, QubitLimitError, FormatError
from otocsim.montecarlo.seeding import substream


def embed_two_qubit(gate, a, b, n):
    """Full matrix of `gate` on qubits (a, b), gate index 2*bit_a + bit_b, built entry by entry."""
    dim = 2 ** n
    full = np.zeros((dim, dim), dtype=complex)
    for x in range(dim):
        xa, xb = (x >> a) & 1, (x >> b) & 1
        rest = x & ~((1 << a) | (1 << b))
        for ya in (0, 1):
            for yb in (0, 1):
                y = rest | (ya << a) | (yb << b)
                full[y, x] = gate[2 * ya + yb, 2 * xa + xb]
    return full


def embed_single_qubit(u, a, n):
    full = np.ones((1, 1), dtype=complex)
    for site in reversed(range(n)):
        full = np.kron(full, u if site == a else np.eye(2))
    return full


def circuit_oracle(circuit):
    """Product of the embedded gate matrices, singles before pairs in each layer."""
    n = circuit.n_qubits
    full = np.eye(2 ** n, dtype=complex)
    for layer in circuit.layers:
        for op in layer.singles:
            full = embed_single_qubit(op.gate, op.site, n) @ full
        for op in layer.ops:
            full = embed_two_qubit(op.gate, op.a, op.b, n) @ full
    return full


def random_state(n, rng):
    amplitudes = rng.standard_normal(2 ** n) + 1j * rng.standard_normal(2 ** n)
    return StateVector(n, amplitudes / np.linalg.norm(amplitudes))


class Test_basisStates(unittest.TestCase):
    def test(self):
        state = zero_state(3)
        self.assertEqual(len(state), 8)
        self.assertEqual(state.amplitudes[0], 1.0)
        self.assertAlmostEqual(state.norm_squared(), 1.0, places=14)
        self.assertEqual(np.argmax(np.abs(basis_state(3, 5).amplitudes)), 5)
        with self.assertRaises(SpecError):
            basis_state(3, 8)
        with self.assertRaises(SpecError):
            zero_state(0)

    def test_little_endian(self):
        state = apply_pauli_string(zero_state(3), PauliString.single('X', 0))
        self.assertEqual(np.argmax(np.abs(state.amplitudes)), 1)
        state = apply_pauli_string(zero_state(3), PauliString.single('X', 2))
        self.assertEqual(np.argmax(np.abs(state.amplitudes)), 4)


class Test_gateKernels(unittest.TestCase):
    def setUp(self):
        self.rng = substream(5, 1)

    def test_single_qubit(self):
        u = sample_haar_unitary(2, self.rng)
        state = random_state(3, self.rng)
        expected = np.kron(np.eye(2), np.kron(u, np.eye(2))) @ state.amplitudes
        apply_single_qubit_gate(state, u, 1)
        self.assertTrue(np.allclose(state.amplitudes, expected, atol=1e-12))

    def test_two_qubit_index_convention(self):
        for a, b in [(0, 1), (1, 0), (2, 0), (0, 3), (3, 1)]:
            gate = sample_haar_unitary(4, self.rng)
            state = random_state(4, self.rng)
            expected = embed_two_qubit(gate, a, b, 4) @ state.amplitudes
            apply_two_qubit_gate(state, gate, a, b)
            self.assertTrue(np.allclose(state.amplitudes, expected, atol=1e-12))

    def test_simple_gates(self):
        swap = np.eye(4)[[0, 2, 1, 3]]
        state = apply_two_qubit_gate(basis_state(2, 1), swap, 0, 1)
        self.assertEqual(np.argmax(np.abs(state.amplitudes)), 2)
        state = random_state(3, self.rng)
        original = state.copy()
        apply_two_qubit_gate(state, np.eye(4), 2, 0)
        self.assertTrue(np.array_equal(state.amplitudes, original.amplitudes))
        hadamard = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
        apply_single_qubit_gate(apply_single_qubit_gate(state, hadamard, 1), hadamard, 1)
        self.assertTrue(np.allclose(state.amplitudes, original.amplitudes, atol=1e-12))
        other = random_state(3, self.rng)
        self.assertAlmostEqual(inner_product(state, other), np.conj(inner_product(other, state)), places=14)
        self.assertEqual(inner_product(basis_state(3, 2), basis_state(3, 5)), 0)

    def test_three_qubit_oracle(self):
        for a, b in [(0, 1), (1, 2), (2, 0)]:
            gate = sample_haar_unitary(4, self.rng)
            state = random_state(3, self.rng)
            expected = embed_two_qubit(gate, a, b, 3) @ state.amplitudes
            apply_two_qubit_gate(state, gate, a, b)
            self.assertLess(np.max(np.abs(state.amplitudes - expected)), 1e-12)
            self.assertAlmostEqual(state.norm_squared(), 1.0, delta=1e-12)

    def test_norm_over_many_gates(self):
        n = 5
        state = random_state(n, self.rng)
        gates = sample_haar_unitary(4, self.rng, size=10000)
        singles = sample_haar_unitary(2, self.rng, size=10000)
        first = self.rng.integers(0, n, size=10000)
        shift = self.rng.integers(1, n, size=10000)
        for step in range(10000):
            a = int(first[step])
            if step % 3 == 2:
                apply_single_qubit_gate(state, singles[step], a)
            else:
                apply_two_qubit_gate(state, gates[step], a, (a + int(shift[step])) % n)
            if step % 500 == 0:
                apply_pauli_string(state, PauliString.from_dict({a: 'Y'}))
            if step % 1000 == 999:
                self.assertLess(abs(state.norm_squared() - 1.0), 1e-10)

    def test_errors(self):
        state = random_state(5, self.rng)
        with self.assertRaises(SpecError):
            apply_two_qubit_gate(state, np.eye(4), 1, 1)
        with self.assertRaises(SpecError):
            apply_two_qubit_gate(state, np.eye(4), 0, 5)
        with self.assertRaises(SpecError):
            apply_two_qubit_gate(state, np.eye(2), 0, 1)


class Test_pauliStrings(unittest.TestCase):
    def setUp(self):
        self.rng = substream(6, 1)

    def test_against_matrices(self):
        for pauli in [PauliString.from_dict({0: 'X'}), PauliString.from_dict({1: 'Y', 3: 'Z'}),
                      PauliString.from_dict({0: 'Y', 1: 'X', 2: 'Z', 3: 'Y'})]:
            state = random_state(4, self.rng)
            expected = pauli_matrix(pauli, 4) @ state.amplitudes
            self.assertTrue(np.allclose(apply_pauli_string(state, pauli).amplitudes, expected, atol=1e-14))

    def test_involution(self):
        for n in range(1, 11):
            for _ in range(5):
                letters = self.rng.integers(0, 4, size=n)
                mapping = {site: 'IXYZ'[int(x)] for site, x in enumerate(letters) if x}
                pauli = PauliString.from_dict(mapping or {n - 1: 'Y'})
                state = random_state(n, self.rng)
                original = state.copy()
                apply_pauli_string(apply_pauli_string(state, pauli), pauli)
                self.assertLess(np.max(np.abs(state.amplitudes - original.amplitudes)), 1e-12)

    def test_expectation(self):
        self.assertAlmostEqual(pauli_expectation(zero_state(3), PauliString.from_dict({0: 'Z', 2: 'Z'})), 1.0)
        self.assertAlmostEqual(pauli_expectation(basis_state(3, 1), PauliString.single('Z', 0)), -1.0)
        self.assertAlmostEqual(pauli_expectation(zero_state(3), PauliString.single('X', 1)), 0.0)
        with self.assertRaises(SpecError):
            apply_pauli_string(zero_state(2), PauliString.single('X', 2))


class Test_circuitApplication(unittest.TestCase):
    def setUp(self):
        self.circuit = sample_circuit(EnsembleSpec(GridGeometry(2, 2), 6, master_seed=21))

    def test_dense_unitary(self):
        expected = np.eye(16, dtype=complex)
        for layer in self.circuit.layers:
            for op in layer.ops:
                expected = embed_two_qubit(op.gate, op.a, op.b, 4) @ expected
        self.assertTrue(np.allclose(dense_unitary(self.circuit), expected, atol=1e-12))

    def test_inverse(self):
        state = random_state(4, substream(7, 0))
        original = state.copy()
        apply_circuit(state, self.circuit, Direction.FORWARD)
        self.assertGreater(np.max(np.abs(state.amplitudes - original.amplitudes)), 1e-3)
        apply_circuit(state, self.circuit, Direction.INVERSE)
        self.assertTrue(np.allclose(state.amplitudes, original.amplitudes, atol=1e-12))
        self.assertAlmostEqual(abs(inner_product(original, state)), 1.0, places=12)

    def test_inverse_deep(self):
        rng = substream(7, 1)
        for depth in range(0, 41, 5):
            for ensemble in (EnsembleType.HAAR_2Q, EnsembleType.FIXED_ENTANGLER):
                entangler = resolve_entangler('sycamore') if ensemble == EnsembleType.FIXED_ENTANGLER else None
                circuit = sample_circuit(EnsembleSpec(GridGeometry(3, 3), depth, ensemble, master_seed=depth,
                                                      entangler=entangler))
                state = random_state(9, rng)
                original = state.copy()
                apply_circuit(apply_circuit(state, circuit, Direction.FORWARD), circuit, Direction.INVERSE)
                self.assertLess(np.max(np.abs(state.amplitudes - original.amplitudes)), 1e-10)

    def test_against_gate_products(self):
        rng = substream(7, 2)
        sqrt_iswap = resolve_entangler('sqrt-iswap')
        for rows, cols in [(1, 1), (1, 2), (1, 3), (2, 2), (1, 5), (2, 3)]:
            for i in range(50):
                fixed = i % 2 == 1
                spec = EnsembleSpec(GridGeometry(rows, cols), int(rng.integers(1, 9)),
                                    EnsembleType.FIXED_ENTANGLER if fixed else EnsembleType.HAAR_2Q,
                                    master_seed=1000 * rows + 100 * cols + i, entangler=sqrt_iswap if fixed else None)
                circuit = sample_circuit(spec)
                oracle = circuit_oracle(circuit)
                state = random_state(circuit.n_qubits, rng)
                expected = oracle @ state.amplitudes
                apply_circuit(state, circuit)
                self.assertLess(np.max(np.abs(state.amplitudes - expected)), 1e-10)
                if i < 4:
                    self.assertLess(np.max(np.abs(dense_unitary(circuit) - oracle)), 1e-10)

    def test_depth_zero(self):
        identity = sample_circuit(EnsembleSpec(GridGeometry(2, 2), 0))
        self.assertTrue(np.array_equal(dense_unitary(identity), np.eye(16)))
        self.assertTrue(np.allclose(dense_unitary(self.circuit).conj().T @ dense_unitary(self.circuit), np.eye(16),
                                    atol=1e-10))

    def test_mismatched_size(self):
        with self.assertRaises(SpecError):
            apply_circuit(zero_state(3), self.circuit)


class Test_memoryGuard(unittest.TestCase):
    def test_default(self):
        with mock.patch.dict(os.environ, {}, clear=True):
            self.assertEqual(max_qubits(), 26)
            with self.assertRaisesRegex(QubitLimitError, r'2\^36'):
                check_qubit_limit(36)
        self.assertEqual(max_qubits(30), 30)

    def test_environment(self):
        with mock.patch.dict(os.environ, {'OTOC_MAX_QUBITS': '4'}):
            with self.assertRaises(QubitLimitError):
                zero_state(5)
            self.assertEqual(len(zero_state(5, max_qubits=5)), 32)
        with mock.patch.dict(os.environ, {'OTOC_MAX_QUBITS': 'many'}):
            with self.assertRaises(SpecError):
                max_qubits()


class Test_stateDump(unittest.TestCase):
    def test(self):
        state = random_state(3, substream(8, 0))
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'psi.bin')
            dump_state(state, path)
            self.assertEqual(os.path.getsize(path), 8 + 8 * 16)
            self.assertTrue(np.array_equal(load_state(path).amplitudes, state.amplitudes))
            with open(path, 'r+b') as handle:
                handle.truncate(40)
            with self.assertRaises(FormatError):
                load_state(path)


if __name__ == '__main__':
    unittest.main()
