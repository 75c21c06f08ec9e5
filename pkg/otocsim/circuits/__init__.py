"""
    Circuits, operators, the statevector engine and light cones.

"""

from .ensemble import (GridGeometry, Circuit, Layer, EnsembleSpec, sample_circuit, brickwork_layout,
                       sample_haar_unitary, resolve_entangler)
from .paulis import PauliString, parse_pauli_string, format_pauli_string
from .statevector import StateVector, zero_state, apply_circuit, apply_pauli_string, inner_product
from .lightcone import min_connecting_depth, commutes_by_lightcone, lightcone_report
