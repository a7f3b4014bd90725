"""Circuit IR, exact statevector simulation, inversion, and text serialization.

A circuit is an ordered gate list applied left-to-right to the ket (the first
list element acts first). Gates are either a single-qubit unitary placed on
one wire or a controlled-Z on a wire pair; controlled-Z is symmetric and
self-inverse. Simulation uses the block-update rules (one 2x2 mix per local
gate, sign flips per CZ), dispatched to the compiled or pure-Python kernels.

Text format (UTF-8, LF, one gate per line, applied top to bottom):

    # qprep3 v1 qubits=3 order=left-first
    L <q> <a.re> <a.im> <b.re> <b.im> <c.re> <c.im> <d.re> <d.im>
    CZ <i> <j>
    RY <q> <theta>

L carries the row-major 2x2 matrix at 17 significant digits. RY lines are an
optional, purely informational restatement of real L gates (emitted on
request, skipped by the parser).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

from . import kernels
from .mat2 import Mat2
from .state import PureState2, PureState3

FORMAT_HEADER = "# qprep3 v1 qubits={n} order=left-first"

# An Ry angle is reported only if the rotation reproduces the gate this closely.
RY_MATCH_TOL = 1e-10


@dataclass(frozen=True)
class LocalGate:
    """Single-qubit unitary on one wire."""

    qubit: int
    matrix: Mat2

    def __post_init__(self):
        if self.qubit not in (0, 1, 2):
            raise ValueError(f"qubit must be 0, 1 or 2, got {self.qubit}")


@dataclass(frozen=True)
class CZGate:
    """Controlled-Z on the wire pair (i, j), i < j."""

    i: int
    j: int

    def __post_init__(self):
        if not (0 <= self.i < self.j <= 2):
            raise ValueError(f"CZ pair must satisfy 0 <= i < j <= 2, got {(self.i, self.j)}")


Gate = Union[LocalGate, CZGate]


@dataclass(frozen=True)
class Circuit:
    gates: tuple[Gate, ...]
    num_qubits: int = 3

    def __post_init__(self):
        for g in self.gates:
            top = g.qubit if isinstance(g, LocalGate) else g.j
            if top >= self.num_qubits:
                raise ValueError(f"gate {g} does not fit in {self.num_qubits} qubits")

    @property
    def cz_count(self) -> int:
        return sum(1 for g in self.gates if isinstance(g, CZGate))

    def max_local_imag(self) -> float:
        """Largest imaginary part over all local-gate entries (0.0 if no locals)."""
        imags = [g.matrix.max_imag() for g in self.gates if isinstance(g, LocalGate)]
        return max(imags, default=0.0)

    def is_real(self, tol: float = 1e-10) -> bool:
        return self.max_local_imag() <= tol


State = Union[PureState2, PureState3]


def apply_gate(g: Gate, s: State) -> State:
    """Apply one gate; returns a new state of the same type."""
    if isinstance(g, LocalGate):
        if g.qubit >= s.num_qubits:
            raise ValueError(f"gate on qubit {g.qubit} applied to {s.num_qubits}-qubit state")
        m = g.matrix
        amps = kernels.apply_local(s.amps, g.qubit, m.a, m.b, m.c, m.d)
    else:
        if g.j >= s.num_qubits:
            raise ValueError(f"CZ on ({g.i}, {g.j}) applied to {s.num_qubits}-qubit state")
        amps = kernels.apply_cz(s.amps, g.i, g.j)
    return type(s)(amps)


def apply_circuit(c: Circuit, s: State) -> State:
    for g in c.gates:
        s = apply_gate(g, s)
    return s


def invert(c: Circuit) -> Circuit:
    """Reverse the gate order and dagger each local gate; CZ is self-inverse."""
    inv: list[Gate] = []
    for g in reversed(c.gates):
        inv.append(LocalGate(g.qubit, g.matrix.dagger()) if isinstance(g, LocalGate) else g)
    return Circuit(tuple(inv), c.num_qubits)


def fidelity_to_basis(s: State, basis_index: int) -> float:
    """|amplitude| at one computational basis index (global-phase blind)."""
    return float(abs(s.amps[basis_index]))


def ry_matrix(theta: float) -> Mat2:
    c, sn = math.cos(theta / 2.0), math.sin(theta / 2.0)
    return Mat2(c, -sn, sn, c)


def ry_angle(u: Mat2) -> Optional[float]:
    """Angle theta with Ry(theta) equal to u entrywise within RY_MATCH_TOL.

    None when u is not (numerically) a real rotation — complex entries or
    determinant -1 gates have no Ry form.
    """
    if u.max_imag() > RY_MATCH_TOL:
        return None
    theta = 2.0 * math.atan2(u.c.real, u.a.real)
    if ry_matrix(theta).distance_to(u) > RY_MATCH_TOL:
        return None
    return theta


# --- text serialization ---------------------------------------------------


def _fmt(x: float) -> str:
    return "%.17g" % x


def emit_circuit(c: Circuit, include_ry: bool = False) -> str:
    """Render a circuit in the one-gate-per-line text format.

    With include_ry, an `RY <q> <theta>` line is appended for every local
    gate (in gate order); raises ValueError if some local gate has no Ry form.
    """
    lines = [FORMAT_HEADER.format(n=c.num_qubits)]
    for g in c.gates:
        if isinstance(g, LocalGate):
            parts = ["L", str(g.qubit)]
            for e in g.matrix.entries():
                parts.append(_fmt(e.real))
                parts.append(_fmt(e.imag))
            lines.append(" ".join(parts))
        else:
            lines.append(f"CZ {g.i} {g.j}")
    if include_ry:
        for g in c.gates:
            if not isinstance(g, LocalGate):
                continue
            theta = ry_angle(g.matrix)
            if theta is None:
                raise ValueError("cannot emit RY lines: a local gate is not a real rotation")
            lines.append(f"RY {g.qubit} {_fmt(theta)}")
    return "\n".join(lines) + "\n"


def parse_circuit(text: str) -> Circuit:
    """Parse the text format back into a Circuit.

    Comment lines (`#`, including the header) set the qubit count when they
    carry a `qubits=N` field; RY lines are informational and skipped.
    """
    num_qubits = 3
    gates: list[Gate] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            for tok in line[1:].split():
                if tok.startswith("qubits="):
                    num_qubits = int(tok.partition("=")[2])
            continue
        parts = line.split()
        kind = parts[0]
        try:
            if kind == "L":
                if len(parts) != 10:
                    raise ValueError("L line needs a qubit and 8 matrix numbers")
                q = int(parts[1])
                v = [float(p) for p in parts[2:]]
                m = Mat2(
                    complex(v[0], v[1]),
                    complex(v[2], v[3]),
                    complex(v[4], v[5]),
                    complex(v[6], v[7]),
                )
                gates.append(LocalGate(q, m))
            elif kind == "CZ":
                if len(parts) != 3:
                    raise ValueError("CZ line needs two qubit indices")
                gates.append(CZGate(int(parts[1]), int(parts[2])))
            elif kind == "RY":
                continue
            else:
                raise ValueError(f"unknown gate kind {kind!r}")
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    return Circuit(tuple(gates), num_qubits)
