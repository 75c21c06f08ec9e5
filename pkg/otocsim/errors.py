"""
    Exceptions raised by otocsim.

    Validation failures subclass ValueError so callers that only know about
    ValueError still catch them; the CLI maps them to exit code 2.
"""


class OtocError(Exception):
    pass


class SpecError(OtocError, ValueError):
    """Invalid geometry, depth, operator, k, shots or sampling parameters."""


class QubitLimitError(SpecError):
    """Requested statevector exceeds the memory guard."""


class OperatorParseError(SpecError):
    pass


class UnsupportedEstimatorError(SpecError):
    """The shot estimator only measures a single qubit."""


class UndefinedCorrelationError(OtocError, ValueError):
    pass


class FormatError(OtocError, ValueError):
    """Malformed circuit JSON, results CSV or state dump."""
