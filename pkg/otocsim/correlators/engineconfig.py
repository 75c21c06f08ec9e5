"""
    Binds a circuit and its operators to the correlator evaluators.

"""

from .namesnmapper import QUANTITY_MAPPER, Quantity, TraceMethod
from . import otoc
from ..montecarlo.namesnmapper import StreamKind
from ..montecarlo.seeding import substream


class CorrelatorEngine:
    """
    Maps a (circuit, B, M, k) choice onto the evaluators in the otoc module.
        Args required:
            circuit: Circuit U
            butterfly: PauliString B
            measurement: PauliString M (Z-type)
            k: (Integer >= 1) moment order, default 1
            max_qubits: memory-guard override passed to every statevector allocation
    """

    def __init__(self, circuit, butterfly, measurement, k=1, max_qubits=None):
        self.circuit = circuit
        self.butterfly = butterfly
        self.measurement = measurement
        self.k = k
        self.max_qubits = max_qubits
        self.spec = otoc.CorrelatorSpec(circuit, butterfly, measurement, k)

    def with_k(self, k):
        return CorrelatorEngine(self.circuit, self.butterfly, self.measurement, k, self.max_qubits)

    def moment(self):
        return otoc.otoc_moment(self.spec, self.max_qubits)

    def moment_direct(self):
        return otoc.otoc_moment_direct(self.spec, self.max_qubits)

    def time_ordered(self):
        return otoc.time_ordered_correlator(self.circuit, self.butterfly, self.measurement, self.max_qubits)

    def expectation(self, observable=None):
        """<0^n|U^dagger A U|0^n>; A defaults to the measurement operator."""
        return otoc.single_qubit_expectation(self.circuit, observable or self.measurement, self.max_qubits)

    def _rng(self, seed, kind):
        return substream(seed if seed is not None else (self.circuit.seed or 0), self.k, kind)

    def estimate(self, shots=None, epsilon=None, seed=None):
        """
        Shot-based estimate of the moment.
            Args required:
                shots: (Integer) repetitions, or
                epsilon: (Float in (0,1)) target additive error, shots = ceil(1/eps^2)
                seed: (Integer) seed of the outcome stream; defaults to the circuit seed
        """
        rng = self._rng(seed, StreamKind.SHOTS)
        return otoc.shot_estimate(self.spec, shots=shots, rng=rng, epsilon=epsilon, max_qubits=self.max_qubits)

    def mixed_moment(self, method=TraceMethod.EXACT, samples=None, seed=None):
        rng = self._rng(seed, StreamKind.TRACE)
        return otoc.mixed_state_moment(self.spec, method=method, samples=samples, rng=rng,
                                       max_qubits=self.max_qubits)

    def evaluate(self, quantity, **kwargs):
        """Dispatches a Quantity name through QUANTITY_MAPPER."""
        quantity = Quantity(quantity)
        return getattr(self, QUANTITY_MAPPER[quantity.value])(**kwargs)
