"""
    Operator support propagation through the brickwork layout.

    Only gate positions matter, so a disjointness certificate holds for every
    gate assignment of the ensemble.
"""

import logging

from scipy import stats

from .ensemble import GridGeometry, brickwork_layout
from .paulis import PauliString
from ..errors import SpecError

logger = logging.getLogger(__name__)

LAYOUT_PERIOD = 4


def _as_sites(initial, n):
    sites = initial.sites if isinstance(initial, PauliString) else frozenset(initial)
    if not sites:
        raise SpecError("initial support must be nonempty")
    bad = [s for s in sites if not 0 <= s < n]
    if bad:
        raise SpecError("support sites %s out of range for %d qubits" % (sorted(bad), n))
    return set(sites)


def propagate_support(geometry, layout, initial):
    """
    Grows a support set through the given layer patterns, in the order given: any
    pair touching a supported site adds its partner.
        Args required:
            geometry: GridGeometry
            layout: list of layers, each a list of (a, b) site pairs
            initial: PauliString or iterable of site indices
    """
    support = _as_sites(initial, geometry.n)
    for pairs in layout:
        grown = set(support)
        for a, b in pairs:
            if a in support or b in support:
                grown.update((a, b))
        support = grown
    return frozenset(support)


def conjugated_support(geometry, depth, butterfly):
    """
    Support of U^dagger B U for a depth-`depth` circuit. B is spread by the last
    layer first, so the first `depth` layers are walked from last to first.
    """
    layout = brickwork_layout(geometry, depth)
    return propagate_support(geometry, list(reversed(layout)), butterfly)


def commutes_by_lightcone(geometry, depth, butterfly, measurement):
    """
    True when the cone of U^dagger B U misses M's sites, which certifies C^2 = 1 for every
    circuit of this layout. False does not prove non-commutation.
    """
    _as_sites(measurement, geometry.n)
    return conjugated_support(geometry, depth, butterfly).isdisjoint(measurement.sites)


def _depth_cap(geometry):
    return LAYOUT_PERIOD * (geometry.rows + geometry.cols + 1)


def min_connecting_depth(geometry, butterfly, measurement):
    """Smallest d with commutes_by_lightcone(d) false; cones only grow with d, so it stays false after."""
    for depth in range(_depth_cap(geometry) + 1):
        if not commutes_by_lightcone(geometry, depth, butterfly, measurement):
            return depth
    raise SpecError("light cone of %s never reaches %s on a %dx%d grid"
                    % (sorted(butterfly.sites), sorted(measurement.sites), geometry.rows, geometry.cols))


def support_size_by_depth(geometry, butterfly, max_depth):
    return [len(conjugated_support(geometry, depth, butterfly)) for depth in range(max_depth + 1)]


def lightcone_report(geometry, butterfly, measurement, max_depth=None):
    """Payload of the `lightcone` CLI subcommand: d_star and cone sizes for depths 0..max_depth."""
    d_star = min_connecting_depth(geometry, butterfly, measurement)
    if max_depth is None:
        max_depth = d_star
    return {'d_star': d_star, 'support_size_by_depth': support_size_by_depth(geometry, butterfly, max_depth)}


def corner_depth_scaling(sides):
    """
    d* between X at (l,l) and Z at (1,1) on l x l grids, with a least-squares line
    through (l, d*).
    """
    sides = [int(side) for side in sides]
    if len(sides) < 2:
        raise SpecError("need at least two grid sizes for a fit")
    depths = []
    for side in sides:
        geometry = GridGeometry(side, side)
        b = PauliString.single('X', geometry.index(side, side))
        m = PauliString.single('Z', geometry.index(1, 1))
        depths.append(min_connecting_depth(geometry, b, m))
    fit = stats.linregress(sides, depths)
    logger.info("corner d* for sides %s: %s (slope %.3f)", sides, depths, fit.slope)
    return {'sides': sides, 'd_star': depths, 'slope': float(fit.slope),
            'intercept': float(fit.intercept), 'r_squared': float(fit.rvalue ** 2)}
