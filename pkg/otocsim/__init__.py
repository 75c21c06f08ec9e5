"""
otocsim: statevector simulation of out-of-time-order correlator moments
for random brickwork circuits on 2D grids.
"""

__version__ = '0.1.0'
