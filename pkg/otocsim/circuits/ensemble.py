"""
    Brickwork random-circuit ensembles on a 2D grid.

    Sites are addressed either by 1-based (row, col) or by the linear index
    (row-1)*cols + (col-1); qubit q of a statevector is bit q of the basis index.
"""

import logging
from dataclasses import dataclass, field
from typing import List, NamedTuple, Optional

import numpy as np

from .namesnmapper import (EnsembleType, LayerPattern, LAYER_CYCLE, LAYER_OFFSETS, ENTANGLER_MAPPER,
                           CIRCUIT_FORMAT_VERSION, UNITARITY_TOL)
from .helperfn import is_unitary, unitarity_residual, complex_to_pairs, pairs_to_complex, fsim_gate
from .paulis import PauliString, format_pauli_string
from ..errors import SpecError, FormatError
from ..montecarlo.namesnmapper import StreamKind
from ..montecarlo.seeding import substream, check_seed

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GridGeometry:
    rows: int
    cols: int

    def __post_init__(self):
        for name in ('rows', 'cols'):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < 1:
                raise SpecError("%s must be a positive integer, got %r" % (name, value))

    @property
    def n(self):
        return self.rows * self.cols

    def index(self, row, col):
        if not (1 <= row <= self.rows and 1 <= col <= self.cols):
            raise SpecError("site (%d,%d) outside %dx%d grid" % (row, col, self.rows, self.cols))
        return (row - 1) * self.cols + (col - 1)

    def coords(self, index):
        if not 0 <= index < self.n:
            raise SpecError("site index %d outside [0, %d)" % (index, self.n))
        return index // self.cols + 1, index % self.cols + 1


class GateOp(NamedTuple):
    gate: np.ndarray
    a: int
    b: int


class SingleOp(NamedTuple):
    gate: np.ndarray
    site: int


@dataclass
class Layer:
    """
    One brickwork layer. Single-qubit gates (fixed-entangler ensemble only) act
    before the two-qubit gates of the same layer.
    """
    ops: List[GateOp] = field(default_factory=list)
    singles: List[SingleOp] = field(default_factory=list)

    @property
    def pairs(self):
        return [(op.a, op.b) for op in self.ops]


@dataclass
class Circuit:
    geometry: GridGeometry
    layers: List[Layer]
    seed: Optional[int] = None
    ensemble: str = EnsembleType.HAAR_2Q.value

    @property
    def depth(self):
        return len(self.layers)

    @property
    def n_qubits(self):
        return self.geometry.n

    def gate_count(self):
        return sum(len(layer.ops) for layer in self.layers)

    def validate(self, atol=UNITARITY_TOL):
        """Raises SpecError if any op leaves the grid, reuses a site in a layer, or is not unitary."""
        n = self.geometry.n
        for depth_index, layer in enumerate(self.layers):
            used = set()
            for op in layer.ops:
                touched = (op.a, op.b)
                if op.a == op.b or not all(0 <= q < n for q in touched):
                    raise SpecError("layer %d: bad gate sites %s for %d qubits" % (depth_index, touched, n))
                if used.intersection(touched):
                    raise SpecError("layer %d: site reused in %s" % (depth_index, touched))
                used.update(touched)
                if np.shape(op.gate) != (4, 4) or not is_unitary(op.gate, atol):
                    raise SpecError("layer %d: gate on %s is not a 4x4 unitary" % (depth_index, touched))
            single_sites = set()
            for op in layer.singles:
                if not 0 <= op.site < n or op.site in single_sites:
                    raise SpecError("layer %d: bad single-qubit site %d" % (depth_index, op.site))
                single_sites.add(op.site)
                if np.shape(op.gate) != (2, 2) or not is_unitary(op.gate, atol):
                    raise SpecError("layer %d: gate on site %d is not a 2x2 unitary" % (depth_index, op.site))
        return True


@dataclass(frozen=True)
class EnsembleSpec:
    """
    Defines the circuit distribution U_{n,d} and the correlator operators.
        Args required:
            geometry: GridGeometry e.g. GridGeometry(3, 3)
            depth: (Integer >= 0) number of brickwork layers
            gate_distribution: 'haar-2q' or 'fixed-entangler'
            butterfly: PauliString B (defaults to X at (rows, cols))
            measurement: PauliString M, Z-type (defaults to Z at (1, 1))
            master_seed: (Integer) 64-bit seed
            entangler: 4x4 unitary, required for 'fixed-entangler'
    """
    geometry: GridGeometry
    depth: int
    gate_distribution: EnsembleType = EnsembleType.HAAR_2Q
    butterfly: Optional[PauliString] = None
    measurement: Optional[PauliString] = None
    master_seed: int = 0
    entangler: Optional[np.ndarray] = field(default=None, compare=False)

    def __post_init__(self):
        if isinstance(self.depth, bool) or not isinstance(self.depth, (int, np.integer)) or self.depth < 0:
            raise SpecError("depth must be a non-negative integer, got %r" % (self.depth,))
        object.__setattr__(self, 'gate_distribution', EnsembleType(self.gate_distribution))
        object.__setattr__(self, 'master_seed', check_seed(self.master_seed))
        if self.butterfly is None:
            object.__setattr__(self, 'butterfly', default_butterfly(self.geometry))
        if self.measurement is None:
            object.__setattr__(self, 'measurement', default_measurement(self.geometry))
        if self.butterfly.is_empty() or self.measurement.is_empty():
            raise SpecError("butterfly and measurement operators must be nonempty")
        if not self.measurement.is_z_type():
            raise SpecError("measurement operator must be Z-type so that M|0^n> = |0^n>")
        self.butterfly.check_range(self.geometry.n)
        self.measurement.check_range(self.geometry.n)
        if self.gate_distribution == EnsembleType.FIXED_ENTANGLER:
            if self.entangler is None:
                raise SpecError("fixed-entangler ensemble needs an entangler gate")
            gate = np.asarray(self.entangler, dtype=complex)
            if gate.shape != (4, 4) or not is_unitary(gate, 1e-10):
                raise SpecError("entangler must be a 4x4 unitary")
            object.__setattr__(self, 'entangler', gate)

    def snapshot(self):
        """JSON-ready description of the ensemble (the entangler is stored as [re, im] pairs)."""
        return {'rows': self.geometry.rows, 'cols': self.geometry.cols, 'depth': self.depth,
                'ensemble': self.gate_distribution.value,
                'butterfly': format_pauli_string(self.butterfly, self.geometry),
                'measurement': format_pauli_string(self.measurement, self.geometry),
                'master_seed': self.master_seed,
                'entangler': None if self.entangler is None else complex_to_pairs(self.entangler)}


def default_butterfly(geometry):
    return PauliString.single('X', geometry.index(geometry.rows, geometry.cols))


def default_measurement(geometry):
    return PauliString.single('Z', geometry.index(1, 1))


def resolve_entangler(name):
    """Named entangler ('iswap', 'sqrt-iswap', 'sycamore', 'cz') or 'fsim:<theta>,<phi>'."""
    key = name.strip().lower()
    if key in ENTANGLER_MAPPER:
        return ENTANGLER_MAPPER[key].copy()
    if key.startswith('fsim:'):
        try:
            theta, phi = (float(v) for v in key[5:].split(','))
        except ValueError:
            raise SpecError("expected 'fsim:<theta>,<phi>', got %r" % name)
        return fsim_gate(theta, phi)
    raise SpecError("unknown entangler %r; choose from %s or fsim:<theta>,<phi>"
                    % (name, ", ".join(sorted(ENTANGLER_MAPPER))))


def sample_haar_unitary(dim, rng, size=None):
    """
    Haar-distributed U(dim) matrices: complex Ginibre -> QR -> fix the phases of R's
    diagonal so that Q is Haar rather than biased by the QR sign convention.
        Args required:
            dim: matrix dimension e.g. 4
            rng: Xoshiro256StarStar stream (or any object with standard_normal)
            size: optional batch size; returns shape (size, dim, dim) when given
    """
    shape = (dim, dim) if size is None else (size, dim, dim)
    z = (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r, axis1=-2, axis2=-1)
    return q * (d / np.abs(d))[..., None, :]


def sample_haar_two_qubit_gate(rng):
    gate = sample_haar_unitary(4, rng)
    assert unitarity_residual(gate) < UNITARITY_TOL, "sampled gate is not unitary"
    return gate


def _pattern_pairs(geometry, pattern):
    orientation, offset = LAYER_OFFSETS[pattern]
    rows, cols = geometry.rows, geometry.cols
    pairs = []
    if orientation == 'H':
        for r in range(1, rows + 1):
            for c in range(1 + offset, cols, 2):
                pairs.append((geometry.index(r, c), geometry.index(r, c + 1)))
    else:
        for r in range(1 + offset, rows, 2):
            for c in range(1, cols + 1):
                pairs.append((geometry.index(r, c), geometry.index(r + 1, c)))
    return pairs


def brickwork_layout(geometry, depth):
    """
    Site pairs of each layer, cycling H-even, V-even, H-odd, V-odd. Open boundaries;
    a pattern with no valid pair gives an empty layer that still counts toward depth.
    """
    if isinstance(depth, bool) or not isinstance(depth, (int, np.integer)) or depth < 0:
        raise SpecError("depth must be a non-negative integer, got %r" % (depth,))
    return [_pattern_pairs(geometry, LAYER_CYCLE[i % len(LAYER_CYCLE)]) for i in range(depth)]


def layer_pattern(layer_index):
    return LAYER_CYCLE[layer_index % len(LAYER_CYCLE)]


def expected_gate_count(geometry, pattern):
    pattern = LayerPattern(pattern)
    orientation, offset = LAYER_OFFSETS[pattern]
    if orientation == 'H':
        return geometry.rows * ((geometry.cols - offset) // 2)
    return geometry.cols * ((geometry.rows - offset) // 2)


def sample_circuit(spec):
    """
    Draws one circuit from the ensemble. Each (layer, slot) uses its own substream
    of spec.master_seed, so the result does not depend on sampling order.
    """
    if not isinstance(spec, EnsembleSpec):
        raise SpecError("sample_circuit expects an EnsembleSpec")
    geometry = spec.geometry
    layers = []
    for layer_index, pairs in enumerate(brickwork_layout(geometry, spec.depth)):
        layer = Layer()
        if spec.gate_distribution == EnsembleType.FIXED_ENTANGLER:
            for site in range(geometry.n):
                rng = substream(spec.master_seed, layer_index, site, StreamKind.SINGLE_QUBIT)
                layer.singles.append(SingleOp(sample_haar_unitary(2, rng), site))
            for a, b in pairs:
                layer.ops.append(GateOp(spec.entangler.copy(), a, b))
        else:
            for slot, (a, b) in enumerate(pairs):
                rng = substream(spec.master_seed, layer_index, slot, StreamKind.TWO_QUBIT)
                layer.ops.append(GateOp(sample_haar_two_qubit_gate(rng), a, b))
        layers.append(layer)
    circuit = Circuit(geometry, layers, seed=spec.master_seed, ensemble=spec.gate_distribution.value)
    logger.debug("sampled %s circuit %dx%d depth %d seed %d (%d gates)", circuit.ensemble,
                 geometry.rows, geometry.cols, circuit.depth, spec.master_seed, circuit.gate_count())
    return circuit


def circuit_to_dict(circuit):
    layers = []
    for layer in circuit.layers:
        entry = {'ops': [{'q': [int(op.a), int(op.b)], 'u': complex_to_pairs(op.gate)} for op in layer.ops]}
        if layer.singles:
            entry['singles'] = [{'q': int(op.site), 'u': complex_to_pairs(op.gate)} for op in layer.singles]
        layers.append(entry)
    return {'version': CIRCUIT_FORMAT_VERSION, 'rows': circuit.geometry.rows, 'cols': circuit.geometry.cols,
            'seed': circuit.seed, 'ensemble': circuit.ensemble, 'layers': layers}


def _field(container, key, path):
    if not isinstance(container, dict) or key not in container:
        raise FormatError("missing field %s.%s" % (path, key) if path else "missing field %s" % key)
    return container[key]


def _list_field(container, key, path, default=None):
    value = _field(container, key, path) if default is None else container.get(key, default)
    if not isinstance(value, list):
        raise FormatError("%s.%s: expected a list" % (path, key))
    return value


def circuit_from_dict(payload):
    """Inverse of circuit_to_dict; errors name the offending field path."""
    version = _field(payload, 'version', '')
    if version != CIRCUIT_FORMAT_VERSION:
        raise FormatError("unsupported circuit format version %r" % (version,))
    try:
        geometry = GridGeometry(_field(payload, 'rows', ''), _field(payload, 'cols', ''))
    except SpecError as err:
        raise FormatError("rows/cols: %s" % err)
    ensemble = _field(payload, 'ensemble', '')
    if ensemble not in EnsembleType._value2member_map_:
        raise FormatError("ensemble: unknown value %r" % (ensemble,))
    raw_layers = _field(payload, 'layers', '')
    if not isinstance(raw_layers, list):
        raise FormatError("layers: expected a list")
    layers = []
    for i, raw in enumerate(raw_layers):
        path = "layers[%d]" % i
        layer = Layer()
        for j, op in enumerate(_list_field(raw, 'ops', path)):
            op_path = "%s.ops[%d]" % (path, j)
            q = _field(op, 'q', op_path)
            if not isinstance(q, list) or len(q) != 2 or not all(isinstance(x, int) for x in q):
                raise FormatError("%s.q: expected two site indices" % op_path)
            try:
                gate = pairs_to_complex(_field(op, 'u', op_path), (4, 4))
            except (ValueError, TypeError) as err:
                raise FormatError("%s.u: %s" % (op_path, err))
            layer.ops.append(GateOp(gate, q[0], q[1]))
        for j, op in enumerate(_list_field(raw, 'singles', path, default=[])):
            op_path = "%s.singles[%d]" % (path, j)
            q = _field(op, 'q', op_path)
            if not isinstance(q, int):
                raise FormatError("%s.q: expected a site index" % op_path)
            try:
                gate = pairs_to_complex(_field(op, 'u', op_path), (2, 2))
            except (ValueError, TypeError) as err:
                raise FormatError("%s.u: %s" % (op_path, err))
            layer.singles.append(SingleOp(gate, q))
        layers.append(layer)
    circuit = Circuit(geometry, layers, seed=payload.get('seed'), ensemble=ensemble)
    try:
        circuit.validate(atol=1e-10)
    except SpecError as err:
        raise FormatError(str(err))
    return circuit
