"""
    Multi-site Pauli operators (butterfly B and measurement M).

    Operator strings use 1-based (row,col) grid coordinates:
        "X:(4,4)"
        "X:(4,4),X:(4,3),X:(3,4)"
        "Z:(1,1)"
"""

import re
from dataclasses import dataclass
from typing import Tuple

from .namesnmapper import PauliLetter
from ..errors import OperatorParseError, SpecError

_TERM = re.compile(r'^\s*([XYZxyz])\s*:\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*$')
_SPLIT = re.compile(r',(?![^()]*\))')


@dataclass(frozen=True)
class PauliString:
    """
    Tensor product of single-site Paulis with identity elsewhere, no global phase.
        terms: tuple of (site index, letter) pairs sorted by site, letters in {X, Y, Z}
    """
    terms: Tuple[Tuple[int, str], ...]

    def __post_init__(self):
        sites = [site for site, _ in self.terms]
        if len(set(sites)) != len(sites):
            raise SpecError("Pauli string acts twice on a site: %s" % sorted(sites))
        for site, letter in self.terms:
            if letter not in PauliLetter._value2member_map_:
                raise SpecError("unknown Pauli letter %r" % letter)
            if site < 0:
                raise SpecError("negative site index %d" % site)
        object.__setattr__(self, 'terms', tuple(sorted(self.terms)))

    @classmethod
    def from_dict(cls, mapping):
        return cls(tuple((int(site), str(letter).upper()) for site, letter in mapping.items()))

    @classmethod
    def single(cls, letter, site):
        return cls(((int(site), letter.upper()),))

    @property
    def sites(self):
        return frozenset(site for site, _ in self.terms)

    def as_dict(self):
        return dict(self.terms)

    def is_z_type(self):
        return all(letter == PauliLetter.Z.value for _, letter in self.terms)

    def is_empty(self):
        return len(self.terms) == 0

    def check_range(self, n):
        bad = [site for site in self.sites if site >= n]
        if bad:
            raise SpecError("Pauli sites %s out of range for %d qubits" % (sorted(bad), n))

    def __len__(self):
        return len(self.terms)


def parse_pauli_string(text, geometry):
    """
    Parses an operator string against a grid geometry.
        Args required:
            text: e.g. "X:(4,4),X:(4,3)"
            geometry: GridGeometry used to map (row,col) to linear site indices
    """
    if text is None or not text.strip():
        raise OperatorParseError("empty operator string")
    terms = []
    for chunk in _SPLIT.split(text.strip()):
        match = _TERM.match(chunk)
        if not match:
            raise OperatorParseError("cannot parse operator term %r in %r (expected like 'X:(1,2)')"
                                     % (chunk.strip(), text))
        letter, row, col = match.group(1).upper(), int(match.group(2)), int(match.group(3))
        if not (1 <= row <= geometry.rows and 1 <= col <= geometry.cols):
            raise OperatorParseError("site (%d,%d) in %r outside %dx%d grid"
                                     % (row, col, text, geometry.rows, geometry.cols))
        terms.append((geometry.index(row, col), letter))
    try:
        return PauliString(tuple(terms))
    except SpecError as err:
        raise OperatorParseError("%s in %r" % (err, text))


def format_pauli_string(pauli, geometry):
    parts = []
    for site, letter in pauli.terms:
        row, col = geometry.coords(site)
        parts.append("%s:(%d,%d)" % (letter, row, col))
    return ",".join(parts)
