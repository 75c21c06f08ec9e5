"""
    Small matrix helpers shared by the circuit modules.

"""

from math import cos, sin

import numpy as np


def unitarity_residual(u):
    u = np.asarray(u)
    return float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))))


def is_unitary(u, atol=1e-12):
    u = np.asarray(u)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        return False
    return unitarity_residual(u) < atol


def fsim_gate(theta, phi):
    """
    fSim(theta, phi): iSWAP-like rotation in the {|01>, |10>} block and a
    conditional phase on |11>. fSim(pi/2, 0) is iSWAP up to the sign of the swap
    amplitudes.
    """
    return np.array([[1, 0, 0, 0],
                     [0, cos(theta), -1j * sin(theta), 0],
                     [0, -1j * sin(theta), cos(theta), 0],
                     [0, 0, 0, np.exp(-1j * phi)]], dtype=complex)


def complex_to_pairs(matrix):
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(matrix)]


def pairs_to_complex(pairs, shape):
    arr = np.asarray(pairs, dtype=float)
    if arr.shape != tuple(shape) + (2,):
        raise ValueError("expected shape %s of [re, im] pairs, got %s" % (tuple(shape), arr.shape[:-1]))
    out = np.empty(arr.shape[:-1], dtype=complex)
    out.real = arr[..., 0]
    out.imag = arr[..., 1]
    return out
