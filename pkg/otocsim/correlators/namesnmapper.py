"""
    Names and mappers for the correlator evaluators.

"""

from enum import Enum


class TraceMethod(Enum):
    EXACT = 'exact'
    STOCHASTIC = 'stochastic'


class Quantity(Enum):
    MOMENT = 'moment'
    MOMENT_DIRECT = 'moment_direct'
    TIME_ORDERED = 'time_ordered'
    EXPECTATION = 'expectation'
    SHOT_ESTIMATE = 'shot_estimate'
    MIXED_MOMENT = 'mixed_moment'


EXACT_TRACE_MAX_QUBITS = 14

# Quantity -> CorrelatorEngine method
QUANTITY_MAPPER = {
    Quantity.MOMENT.value: "moment",
    Quantity.MOMENT_DIRECT.value: "moment_direct",
    Quantity.TIME_ORDERED.value: "time_ordered",
    Quantity.EXPECTATION.value: "expectation",
    Quantity.SHOT_ESTIMATE.value: "estimate",
    Quantity.MIXED_MOMENT.value: "mixed_moment",
}
