"""
    Correlator C = U^dagger B U M and its moments <0^n|C^{2k}|0^n>.

    With M|0^n> = |0^n>, M^2 = 1 and U^dagger B U Hermitian,
        <0^n|C^{2k}|0^n> = <psi|M|psi>,  |psi> = C^k|0^n>,
    which is what a device measures; otoc_moment evaluates it that way and
    otoc_moment_direct applies C 2k times as a cross-check.
"""

import logging
from dataclasses import dataclass
from math import sqrt
from typing import Optional

import numpy as np

from ..circuits.ensemble import Circuit
from ..circuits.namesnmapper import Direction
from ..circuits.paulis import PauliString
from ..circuits.statevector import (zero_state, basis_state, apply_circuit, apply_pauli_string, inner_product,
                                    pauli_expectation, check_qubit_limit)
from ..errors import SpecError, UnsupportedEstimatorError
from ..montecarlo.namesnmapper import StreamKind
from ..montecarlo.seeding import substream
from ..montecarlo.shots import BernoulliShots, shots_for_epsilon
from .namesnmapper import TraceMethod, EXACT_TRACE_MAX_QUBITS

logger = logging.getLogger(__name__)

REAL_TOL = 1e-10


@dataclass(frozen=True)
class CorrelatorSpec:
    """
        Args required:
            circuit: Circuit U
            butterfly: PauliString B (nonempty)
            measurement: PauliString M (Z-type)
            k: (Integer >= 1) moment order, <C^{2k}>
    """
    circuit: Circuit
    butterfly: PauliString
    measurement: PauliString
    k: int = 1

    def __post_init__(self):
        if isinstance(self.k, bool) or not isinstance(self.k, (int, np.integer)) or self.k < 1:
            raise SpecError("k must be a positive integer, got %r" % (self.k,))
        if self.butterfly.is_empty():
            raise SpecError("butterfly operator must be nonempty")
        if self.measurement.is_empty() or not self.measurement.is_z_type():
            raise SpecError("measurement operator must be a nonempty Z-type Pauli string")
        self.butterfly.check_range(self.circuit.n_qubits)
        self.measurement.check_range(self.circuit.n_qubits)

    @property
    def n_qubits(self):
        return self.circuit.n_qubits


@dataclass(frozen=True)
class ShotEstimate:
    estimate: float
    stderr: float
    shots: int
    target_epsilon: Optional[float] = None


@dataclass(frozen=True)
class TraceMoment:
    value: float
    stderr: Optional[float]
    method: str
    samples: int


def apply_correlator(state, spec):
    """state <- U^dagger B U M |state>."""
    if not spec.measurement.is_z_type():
        raise SpecError("measurement operator must be Z-type")
    apply_pauli_string(state, spec.measurement)
    apply_circuit(state, spec.circuit, Direction.FORWARD)
    apply_pauli_string(state, spec.butterfly)
    apply_circuit(state, spec.circuit, Direction.INVERSE)
    return state


def _evolved(spec, state):
    for _ in range(spec.k):
        apply_correlator(state, spec)
    return state


def _check_moment(value):
    assert abs(value.imag) < REAL_TOL, "moment has imaginary part %g" % value.imag
    assert -1 - REAL_TOL <= value.real <= 1 + REAL_TOL, "moment %r outside [-1, 1]" % value.real
    return min(max(value.real, -1.0), 1.0)


def otoc_moment(spec, max_qubits=None):
    """<0^n|C^{2k}|0^n> as <psi|M|psi> with |psi> = C^k|0^n> (k correlator applications)."""
    psi = _evolved(spec, zero_state(spec.n_qubits, max_qubits))
    value = inner_product(psi, apply_pauli_string(psi.copy(), spec.measurement))
    return _check_moment(value)


def otoc_moment_direct(spec, max_qubits=None):
    """<0^n|C^{2k}|0^n> by applying C 2k times; returns the complex overlap."""
    start = zero_state(spec.n_qubits, max_qubits)
    state = start.copy()
    for _ in range(2 * spec.k):
        apply_correlator(state, spec)
    return inner_product(start, state)


def time_ordered_correlator(circuit, butterfly, measurement, max_qubits=None):
    """<0^n|U^dagger B U M|0^n>, complex in general."""
    butterfly.check_range(circuit.n_qubits)
    measurement.check_range(circuit.n_qubits)
    start = zero_state(circuit.n_qubits, max_qubits)
    state = apply_pauli_string(start.copy(), measurement)
    apply_circuit(state, circuit, Direction.FORWARD)
    apply_pauli_string(state, butterfly)
    apply_circuit(state, circuit, Direction.INVERSE)
    return inner_product(start, state)


def single_qubit_expectation(circuit, observable, max_qubits=None):
    """<0^n|U^dagger A U|0^n> for a Pauli observable A."""
    state = apply_circuit(zero_state(circuit.n_qubits, max_qubits), circuit, Direction.FORWARD)
    return pauli_expectation(state, observable)


def shot_estimate(spec, shots=None, rng=None, epsilon=None, max_qubits=None):
    """
    Emulates measuring the M qubit of C^k|0^n> `shots` times.
        Args required:
            spec: CorrelatorSpec whose M is a single-site Z
            shots: (Integer >= 1) repetitions; or give epsilon for ceil(1/eps^2)
            rng: Xoshiro256StarStar stream for the outcome draws
    """
    if len(spec.measurement) != 1:
        raise UnsupportedEstimatorError("shot estimator measures one qubit; M has %d sites (use the exact path)"
                                        % len(spec.measurement))
    if (shots is None) == (epsilon is None):
        raise SpecError("give exactly one of shots and epsilon")
    if epsilon is not None:
        shots = shots_for_epsilon(epsilon)
    if isinstance(shots, bool) or not isinstance(shots, (int, np.integer)) or shots < 1:
        raise SpecError("shots must be a positive integer, got %r" % (shots,))
    if rng is None:
        rng = substream(0, StreamKind.SHOTS)
    psi = _evolved(spec, zero_state(spec.n_qubits, max_qubits))
    z_value = pauli_expectation(psi, spec.measurement)
    sampler = BernoulliShots((1.0 + z_value) / 2.0, shots, rng)
    return ShotEstimate(sampler.estimate(), sampler.stderr(), int(shots), epsilon)


def _diagonal_moment(spec, index, max_qubits):
    """<x|C^{2k}|x> = m_x <psi_x|M|psi_x> with |psi_x> = C^k|x> and M|x> = m_x|x>."""
    z_mask = sum(1 << site for site in spec.measurement.sites)
    sign = -1.0 if bin(index & z_mask).count('1') % 2 else 1.0
    psi = _evolved(spec, basis_state(spec.n_qubits, index, max_qubits))
    return sign * pauli_expectation(psi, spec.measurement)


def mixed_state_moment(spec, method=TraceMethod.EXACT, samples=None, rng=None, max_qubits=None):
    """
    Tr(C^{2k}) / 2^n. Exact sums every basis state (n <= 14); stochastic averages
    uniformly drawn basis states and reports the sample standard error.
    """
    method = TraceMethod(method)
    n = spec.n_qubits
    check_qubit_limit(n, max_qubits)
    if method == TraceMethod.EXACT:
        if n > EXACT_TRACE_MAX_QUBITS:
            raise SpecError("exact trace needs n <= %d, got %d; use the stochastic method"
                            % (EXACT_TRACE_MAX_QUBITS, n))
        values = np.array([_diagonal_moment(spec, x, max_qubits) for x in range(2 ** n)])
        return TraceMoment(float(np.mean(values)), None, method.value, 2 ** n)
    if isinstance(samples, bool) or not isinstance(samples, (int, np.integer)) or samples < 1:
        raise SpecError("stochastic trace needs samples >= 1, got %r" % (samples,))
    if rng is None:
        rng = substream(0, StreamKind.TRACE)
    indices = rng.integers(0, 2 ** n, size=samples)
    values = np.array([_diagonal_moment(spec, int(x), max_qubits) for x in indices])
    stderr = float(np.std(values, ddof=1) / sqrt(samples)) if samples > 1 else None
    return TraceMoment(float(np.mean(values)), stderr, method.value, int(samples))
