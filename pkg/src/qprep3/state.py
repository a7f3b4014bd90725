"""Pure-state containers, block-matrix views, the real discriminant, and
tensor-factorization tests.

Amplitude ordering is |000>, |001>, ..., |111> with qubit 0 the rightmost
(least significant) position of the ket label: basis index i has qubit q in
state (i >> q) & 1. A 3-qubit state splits into two 2x2 blocks,
|phi> = |0>T0 + |1>T1, with T0 = [[w0, w1], [w2, w3]], T1 = [[w4, w5], [w6, w7]].
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .errors import NotNormalizedError, NotRealError
from .mat2 import EPS_ZERO, Mat2

# Inputs farther than this from unit norm are rejected; closer ones are
# renormalized (exactly-normalized inputs pass through bit-identically).
NORM_REJECT = 1e-6
NORM_EXACT = 1e-12

# Row-minor threshold for declaring a state a (2-qubit) x (1-qubit) product.
FACTOR_TOL = 1e-10


def _prepare_amps(raw, length: int) -> np.ndarray:
    amps = np.array(raw, dtype=np.complex128).reshape(-1)
    if amps.shape[0] != length:
        raise ValueError(f"expected {length} amplitudes, got {amps.shape[0]}")
    if not np.all(np.isfinite(amps.view(np.float64))):
        raise NotNormalizedError("amplitudes must be finite")
    norm = float(np.linalg.norm(amps))
    if abs(norm - 1.0) > NORM_REJECT:
        raise NotNormalizedError(f"state norm {norm!r} is not within {NORM_REJECT} of 1")
    if abs(norm - 1.0) > NORM_EXACT:
        amps = amps / norm
    amps.flags.writeable = False
    return amps


@dataclass(frozen=True, eq=False)
class PureState3:
    """Normalized 3-qubit state; `amps` is a read-only complex128 array of length 8."""

    amps: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "amps", _prepare_amps(self.amps, 8))

    @property
    def num_qubits(self) -> int:
        return 3

    def max_imag(self) -> float:
        return float(np.max(np.abs(self.amps.imag)))

    def is_real(self, tol: float = 1e-12) -> bool:
        return self.max_imag() <= tol


@dataclass(frozen=True, eq=False)
class PureState2:
    """Normalized 2-qubit state; `amps` has length 4, order |00>, |01>, |10>, |11>."""

    amps: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "amps", _prepare_amps(self.amps, 4))

    @property
    def num_qubits(self) -> int:
        return 2

    def max_imag(self) -> float:
        return float(np.max(np.abs(self.amps.imag)))

    def is_real(self, tol: float = 1e-12) -> bool:
        return self.max_imag() <= tol


@dataclass(frozen=True)
class BlockPair:
    """The two 2x2 amplitude blocks of a 3-qubit state."""

    t0: Mat2
    t1: Mat2


class Factorization(NamedTuple):
    pair: PureState2  # lives on qubits (2, 1)
    single: tuple[complex, complex]  # qubit 0, unit norm, leading entry real-positive


def basis_state(num_qubits: int, index: int = 0) -> PureState3 | PureState2:
    amps = np.zeros(2**num_qubits, dtype=np.complex128)
    amps[index] = 1.0
    return PureState3(amps) if num_qubits == 3 else PureState2(amps)


def blocks(s: PureState3) -> BlockPair:
    """Split s into |0>T0 + |1>T1."""
    w = s.amps
    t0 = Mat2(complex(w[0]), complex(w[1]), complex(w[2]), complex(w[3]))
    t1 = Mat2(complex(w[4]), complex(w[5]), complex(w[6]), complex(w[7]))
    return BlockPair(t0, t1)


def unblocks(p: BlockPair) -> PureState3:
    """Inverse of blocks(); exact placement, so blocks(unblocks(p)) == p."""
    return PureState3(np.array(p.t0.entries() + p.t1.entries(), dtype=np.complex128))


def t_matrix(s: PureState2) -> Mat2:
    """The 2x2 amplitude matrix of a 2-qubit state."""
    w = s.amps
    return Mat2(complex(w[0]), complex(w[1]), complex(w[2]), complex(w[3]))


def delta(s: PureState3) -> float:
    """Real discriminant of a real 3-qubit state.

    delta >= 0 selects the 3-CZ real synthesis path, delta < 0 the 4-CZ path.
    Raises NotRealError when the state has imaginary content above 1e-12.
    """
    if not s.is_real():
        raise NotRealError("delta is defined only for real-amplitude states")
    w = s.amps.real
    s1 = w[0] * w[7] - w[1] * w[6] - w[2] * w[5] + w[3] * w[4]
    return float(s1 * s1 - 4.0 * (w[1] * w[2] - w[0] * w[3]) * (w[5] * w[6] - w[4] * w[7]))


def _rows4(s: PureState3) -> list[tuple[complex, complex]]:
    w = s.amps
    return [
        (complex(w[0]), complex(w[1])),
        (complex(w[2]), complex(w[3])),
        (complex(w[4]), complex(w[5])),
        (complex(w[6]), complex(w[7])),
    ]


def factor_right(s: PureState3) -> Optional[Factorization]:
    """Split s into (2-qubit state on qubits 2,1) x (single qubit 0) if possible.

    Succeeds iff all six pairwise 2x2 minors among the four block rows are
    below FACTOR_TOL; the single-qubit factor is the dominant row normalized,
    its first nonzero component made real-positive.
    """
    rows = _rows4(s)
    for i in range(4):
        for j in range(i + 1, 4):
            minor = rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0]
            if abs(minor) > FACTOR_TOL:
                return None
    norms = [abs(r[0]) ** 2 + abs(r[1]) ** 2 for r in rows]
    dom = max(range(4), key=norms.__getitem__)
    v1, v2 = rows[dom]
    vnorm = math.sqrt(norms[dom])
    v1, v2 = v1 / vnorm, v2 / vnorm
    lead = v1 if abs(v1) > EPS_ZERO else v2
    phase = lead / abs(lead)
    v1, v2 = v1 / phase, v2 / phase
    coeffs = [v1.conjugate() * r[0] + v2.conjugate() * r[1] for r in rows]
    return Factorization(PureState2(np.array(coeffs)), (v1, v2))


def reconstruct(f: Factorization) -> PureState3:
    """Tensor product of a factorization, back on 8 amplitudes."""
    beta = f.pair.amps
    a0, a1 = f.single
    amps = np.empty(8, dtype=np.complex128)
    for r in range(4):
        amps[2 * r] = beta[r] * a0
        amps[2 * r + 1] = beta[r] * a1
    return PureState3(amps)


def overlap(s1, s2) -> float:
    """|<s1|s2>|, the phase-blind fidelity between same-size states."""
    return float(abs(np.vdot(s1.amps, s2.amps)))


def random_state(seed, real_only: bool = False) -> PureState3:
    """Haar-like random 3-qubit state: normalized iid Gaussian amplitudes."""
    return PureState3(_gaussian_amps(seed, 8, real_only))


def random_state2(seed, real_only: bool = False) -> PureState2:
    """Haar-like random 2-qubit state."""
    return PureState2(_gaussian_amps(seed, 4, real_only))


def _gaussian_amps(seed, length: int, real_only: bool) -> np.ndarray:
    rng = np.random.default_rng(seed)
    amps = rng.standard_normal(length).astype(np.complex128)
    if not real_only:
        amps += 1j * rng.standard_normal(length)
    return amps / np.linalg.norm(amps)
