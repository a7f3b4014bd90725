# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled statevector kernels; see _kernels_py for the reference semantics."""
import numpy as np


def apply_local(const double complex[::1] amps, int qubit,
                double complex u00, double complex u01,
                double complex u10, double complex u11):
    """Apply the 2x2 unitary [[u00, u01], [u10, u11]] to one qubit."""
    cdef int n = amps.shape[0]
    out_arr = np.empty(n, dtype=np.complex128)
    cdef double complex[::1] out = out_arr
    cdef int step = 1 << qubit
    cdef int base
    cdef double complex lo, hi
    for base in range(n):
        if base & step:
            continue
        lo = amps[base]
        hi = amps[base | step]
        out[base] = u00 * lo + u01 * hi
        out[base | step] = u10 * lo + u11 * hi
    return out_arr


def apply_cz(const double complex[::1] amps, int qi, int qj):
    """Flip the sign of every amplitude whose qubits qi and qj are both 1."""
    cdef int n = amps.shape[0]
    out_arr = np.empty(n, dtype=np.complex128)
    cdef double complex[::1] out = out_arr
    cdef int mask = (1 << qi) | (1 << qj)
    cdef int base
    for base in range(n):
        if (base & mask) == mask:
            out[base] = -amps[base]
        else:
            out[base] = amps[base]
    return out_arr
