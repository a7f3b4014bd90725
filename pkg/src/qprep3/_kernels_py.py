"""Pure-Python statevector kernels (fallback when the compiled extension is absent).

Same contracts as _kernels_c: inputs are complex128 arrays of length 2**n,
outputs are fresh arrays, inputs are never mutated.
"""
import numpy as np


def apply_local(amps, qubit, u00, u01, u10, u11):
    """Apply the 2x2 unitary [[u00, u01], [u10, u11]] to one qubit."""
    n = amps.shape[0]
    out = np.empty(n, dtype=np.complex128)
    step = 1 << qubit
    for base in range(n):
        if base & step:
            continue
        lo = amps[base]
        hi = amps[base | step]
        out[base] = u00 * lo + u01 * hi
        out[base | step] = u10 * lo + u11 * hi
    return out


def apply_cz(amps, qi, qj):
    """Flip the sign of every amplitude whose qubits qi and qj are both 1."""
    n = amps.shape[0]
    out = np.empty(n, dtype=np.complex128)
    mask = (1 << qi) | (1 << qj)
    for base in range(n):
        a = amps[base]
        out[base] = -a if (base & mask) == mask else a
    return out
