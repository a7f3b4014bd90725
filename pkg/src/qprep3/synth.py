"""Synthesis of disentangling circuits for 2- and 3-qubit pure states.

Every synthesizer returns a verified circuit mapping the input state to the
all-zeros basis state (invert it to prepare). Guarantees:

  disentangle2       any 2-qubit state,   <= 1 controlled-Z
  disentangle3       any 3-qubit state,   <= 3 controlled-Z
  disentangle3_real  real 3-qubit states, <= 4 controlled-Z, all gates real
                     (<= 3 when the discriminant is nonnegative)

The 3-qubit flow works on the block view |phi> = |0>A + |1>B: one local gate
makes A singular (a root of det(A + zB) = 0, or a block swap when det(B) = 0),
two more squeeze A to its top-left entry, a conjugated cz01 sandwich makes B
singular, cz02 aligns all block rows, and the residual (2-qubit) x (1-qubit)
product is finished off by the 2-qubit routine on qubits (2, 1). Skipped
stages lower the CZ count; every stage asserts its postcondition at runtime
and raises SynthesisInvariantError (with the branch trace) on violation.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .circuit import Circuit, CZGate, Gate, LocalGate, apply_circuit, apply_gate, fidelity_to_basis, invert
from .errors import NotRealError, SynthesisInvariantError
from .mat2 import EPS_ZERO, IDENTITY, SWAP_BLOCKS, Mat2, l1, r1, r2, r3, solve_det_pencil, u_from_pair
from .state import (
    PureState2,
    PureState3,
    basis_state,
    blocks,
    delta,
    factor_right,
    overlap,
    t_matrix,
)

STEP_TOL = 1e-9  # runtime tolerance for the per-step invariants
PRUNE_TOL = 1e-14  # local gates this close to identity are omitted
REAL_GATE_TOL = 1e-10  # max imaginary part allowed on gates in real mode
REAL_STATE_TOL = 1e-12  # max imaginary part allowed on real-mode inputs
REAL_ROOT_TOL = 1e-8  # a pencil root counts as real below this imaginary part
FID2_MIN = 1.0 - 1e-10
FID3_MIN = 1.0 - 1e-9


@dataclass(frozen=True)
class SynthesisReport:
    """Result of a synthesis run (disentangling direction unless produced by prepare)."""

    circuit: Circuit
    cz_count: int
    all_real: bool
    branch_trace: tuple[str, ...]
    fidelity: float


class _Builder:
    """Accumulates gates while tracking their action on the actual state."""

    def __init__(self, state):
        self.state = state
        self.gates: list[Gate] = []
        self.trace: list[str] = []

    def say(self, label: str) -> None:
        self.trace.append(label)

    def emit(self, gate: Gate) -> None:
        if isinstance(gate, LocalGate) and gate.matrix.distance_to(IDENTITY) <= PRUNE_TOL:
            return
        self.state = apply_gate(gate, self.state)
        self.gates.append(gate)

    def require(self, cond: bool, msg: str) -> None:
        if not cond:
            raise SynthesisInvariantError(msg, self.trace)

    def finish(self, min_fidelity: float, max_cz: int) -> SynthesisReport:
        circ = Circuit(tuple(self.gates), self.state.num_qubits)
        fid = fidelity_to_basis(self.state, 0)
        self.require(fid >= min_fidelity, f"final fidelity {fid!r} below {min_fidelity!r}")
        self.require(circ.cz_count <= max_cz, f"cz count {circ.cz_count} exceeds {max_cz}")
        return SynthesisReport(circ, circ.cz_count, circ.is_real(REAL_GATE_TOL), tuple(self.trace), fid)


def _row2_norm(m: Mat2) -> float:
    return max(abs(m.c), abs(m.d))


def _col2_norm(m: Mat2) -> float:
    return max(abs(m.b), abs(m.d))


def disentangle2(s: PureState2) -> SynthesisReport:
    """Circuit (gates on qubits 0 and 1) mapping s to |00>.

    Zero CZ when the amplitude matrix is singular (product state), one CZ
    otherwise.
    """
    b = _Builder(s)
    _run2(b)
    return b.finish(FID2_MIN, 1)


def _run2(b: _Builder) -> None:
    t = t_matrix(b.state)
    if abs(t.det()) <= EPS_ZERO:
        b.say("detT=0")
    else:
        b.say("detT!=0")
        # gate transposed so the amplitude matrix is right-multiplied by r1
        # itself; cz then flips (2,2) and leaves proportional rows
        b.emit(LocalGate(0, r1(t).transpose()))
        b.emit(CZGate(0, 1))
        t = t_matrix(b.state)
        b.require(abs(t.det()) <= STEP_TOL, "2q: cz sandwich left det nonzero")
    k1 = l1(t)
    b.emit(LocalGate(1, k1))
    b.require(
        max(abs(complex(b.state.amps[2])), abs(complex(b.state.amps[3]))) <= STEP_TOL,
        "2q: second row not annihilated",
    )
    eta0 = complex(b.state.amps[0])
    eta1 = complex(b.state.amps[1])
    b.emit(LocalGate(0, u_from_pair(eta0.conjugate(), -eta1).transpose()))


def disentangle3(s: PureState3) -> SynthesisReport:
    """Circuit mapping an arbitrary 3-qubit state to |000> with at most 3 CZ."""
    b = _Builder(s)
    _run3(b, require_real=False)
    return b.finish(FID3_MIN, 3)


def disentangle3_real(s: PureState3) -> SynthesisReport:
    """All-real circuit mapping a real 3-qubit state to |000>.

    At most 3 CZ when delta(s) >= 0, at most 4 otherwise (one cz01 preceded by
    a real local gate first forces a singular top block, after which the
    general flow applies with real branch choices throughout).
    """
    if not s.is_real(REAL_STATE_TOL):
        raise NotRealError("disentangle3_real requires real amplitudes")
    d = delta(s)
    b = _Builder(s)
    if d >= 0.0:
        b.say("delta>=0")
        _run3(b, require_real=True)
        max_cz = 3
    else:
        b.say("delta<0")
        a0 = blocks(b.state).t0
        if abs(a0.det()) <= EPS_ZERO * max(a0.frobenius() ** 2, 1e-300):
            # |delta| is then ~1e-10 or smaller: the top block is already
            # numerically singular and the 3-CZ machinery applies directly
            b.say("detA0~0")
            _run3(b, require_real=True)
        else:
            b.emit(LocalGate(0, r1(a0).transpose()))
            b.emit(CZGate(0, 1))
            _run3(b, require_real=True)
        max_cz = 4
    rep = b.finish(FID3_MIN, max_cz)
    b.require(rep.all_real, f"real mode emitted a non-real gate (max imag {rep.circuit.max_local_imag()!r})")
    return rep


def _pick_step1_root(b: _Builder, roots: list[complex], require_real: bool) -> complex:
    if not require_real:
        return roots[0]
    real_roots = [z for z in roots if abs(z.imag) <= REAL_ROOT_TOL]
    if real_roots:
        return complex(real_roots[0].real, 0.0)
    # conjugate pair from a slightly negative discriminant: its shared real
    # part is the best real root; the step-1 invariant verifies the residual
    b.say("pencil-root-clamped")
    return complex(roots[0].real, 0.0)


def _run3(b: _Builder, require_real: bool) -> None:
    bp = blocks(b.state)
    a0, b0 = bp.t0, bp.t1
    if abs(b0.det()) <= EPS_ZERO:
        b.say("detB0=0")
        w1 = SWAP_BLOCKS
    else:
        b.say("pencil")
        z0 = _pick_step1_root(b, solve_det_pencil(a0, b0), require_real)
        w1 = u_from_pair(1.0, z0)
    b.emit(LocalGate(2, w1))

    bp = blocks(b.state)
    a1, b1 = bp.t0, bp.t1
    b.require(abs(a1.det()) <= STEP_TOL, "step1: det of top block not killed")
    if a1.frobenius() <= EPS_ZERO:
        # whole state lives in the bottom block: swap blocks (det +1 variant
        # of X) and finish with the 2-qubit routine on qubits (1, 0)
        b.say("A1=0")
        b.emit(LocalGate(2, SWAP_BLOCKS))
        sub = PureState2(b.state.amps[:4].copy())
        _embed2(b, sub, low_qubit=0)
        return

    u2 = l1(a1)
    b.emit(LocalGate(1, u2))
    a2 = blocks(b.state).t0
    b.require(_row2_norm(a2) <= STEP_TOL, "step2: second row of top block survives")

    u3 = r3(a2)
    b.emit(LocalGate(0, u3.transpose()))
    bp = blocks(b.state)
    a3, b3 = bp.t0, bp.t1
    b.require(
        max(abs(a3.b), abs(a3.c), abs(a3.d)) <= STEP_TOL,
        "step3: top block not reduced to its corner",
    )

    if abs(b3.det()) <= EPS_ZERO:
        b.say("skip-step4")
    else:
        b.say("step4")
        u4 = r1(b3).transpose()
        b.emit(LocalGate(0, u4))
        b.emit(CZGate(0, 1))
        b.emit(LocalGate(0, u4.dagger()))
        bp = blocks(b.state)
        a4, b4 = bp.t0, bp.t1
        b.require(abs(b4.det()) <= STEP_TOL, "step4: det of bottom block not killed")
        b.require(a4.distance_to(a3) <= STEP_TOL, "step4: top block disturbed")

    b4 = blocks(b.state).t1
    if _col2_norm(b4) <= EPS_ZERO:
        b.say("skip-step5")
    else:
        b.say("step5")
        u5 = r2(b4).transpose()
        b.emit(LocalGate(0, u5))
        b.emit(CZGate(0, 2))

    fac = factor_right(b.state)
    b.require(fac is not None, "step5: block rows not proportional, state did not factor")
    pair, (v1, v2) = fac
    b.emit(LocalGate(0, u_from_pair(v1.conjugate(), -v2).transpose()))
    _embed2(b, pair, low_qubit=1, product_label="b3=0", entangled_label="cz12")


def _embed2(b: _Builder, sub: PureState2, low_qubit: int, product_label: str | None = None, entangled_label: str | None = None) -> None:
    """Disentangle a 2-qubit factor living on (low_qubit+1, low_qubit)."""
    rep = disentangle2(sub)
    if product_label is not None:
        b.say(product_label if rep.cz_count == 0 else entangled_label)
    b.trace.extend(rep.branch_trace)
    for g in rep.circuit.gates:
        if isinstance(g, LocalGate):
            b.emit(LocalGate(g.qubit + low_qubit, g.matrix))
        else:
            b.emit(CZGate(g.i + low_qubit, g.j + low_qubit))


State = Union[PureState2, PureState3]


def prepare(s: State, mode: str = "general") -> SynthesisReport:
    """Preparation circuit: apply report.circuit to |0..0> to reproduce s.

    The circuit is the inverted disentangler; cz count and branch trace are
    the disentangler's, fidelity is the overlap |<s|prepared>|.
    """
    if mode not in ("general", "real"):
        raise ValueError(f"mode must be 'general' or 'real', got {mode!r}")
    if isinstance(s, PureState2):
        if mode == "real" and not s.is_real(REAL_STATE_TOL):
            raise NotRealError("real-mode preparation requires real amplitudes")
        rep = disentangle2(s)
    elif mode == "real":
        rep = disentangle3_real(s)
    else:
        rep = disentangle3(s)
    prep = invert(rep.circuit)
    produced = apply_circuit(prep, basis_state(s.num_qubits, 0))
    fid = overlap(s, produced)
    if fid < FID3_MIN:
        raise SynthesisInvariantError(
            f"preparation round-trip fidelity {fid!r} below {FID3_MIN!r}", rep.branch_trace
        )
    return SynthesisReport(prep, prep.cz_count, prep.is_real(REAL_GATE_TOL), rep.branch_trace, fid)
