"""Command-line front end.

Subcommands:

    synth <file> [--real] [--prepare] [--verify] [--ry] [--out <path>]
    sweep --n <k> --seed <s> [--real] [--machine]
    delta <file>

State files hold one amplitude per line as `<re> <im>` decimals in basis
order |000>..|111> (or |00>..|11> for 2 qubits); `#` starts a comment.
Inputs within 1e-6 of unit norm are renormalized, anything farther is
rejected.

Exit codes: 0 success, 1 parse/normalization error, 2 mode violation
(complex input where real amplitudes are required), 3 internal invariant or
bound failure (the branch trace is dumped to stderr). All output is
deterministic given (input, flags, seed).
"""
from __future__ import annotations

import argparse
import sys

import numpy as np

from .circuit import emit_circuit
from .errors import NotNormalizedError, NotRealError, SynthesisInvariantError
from .state import PureState2, PureState3, delta, random_state
from .synth import SynthesisReport, disentangle2, disentangle3, disentangle3_real, prepare

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_MODE = 2
EXIT_INVARIANT = 3

REAL_INPUT_TOL = 1e-12
DELTA_ZERO_BAND = 1e-12
FIDELITY_MIN = 1.0 - 1e-9


def _fmt(x: float) -> str:
    return "%.17g" % x


def parse_state_text(text: str) -> np.ndarray:
    """Parse a state file into 4 or 8 complex amplitudes."""
    values = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected '<re> <im>'")
        try:
            values.append(complex(float(parts[0]), float(parts[1])))
        except ValueError:
            raise ValueError(f"line {lineno}: non-numeric amplitude") from None
    if len(values) not in (4, 8):
        raise ValueError(f"expected 4 or 8 amplitudes, got {len(values)}")
    return np.array(values, dtype=np.complex128)


def _load_state(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            amps = parse_state_text(fh.read())
        return PureState3(amps) if amps.shape[0] == 8 else PureState2(amps)
    except (OSError, ValueError, NotNormalizedError) as exc:
        raise _InputError(str(exc)) from exc


class _InputError(Exception):
    pass


def _dump_invariant(exc: SynthesisInvariantError) -> None:
    print(f"error: {exc}", file=sys.stderr)
    print("branch trace: " + (" > ".join(exc.branch_trace) or "(empty)"), file=sys.stderr)


def _cmd_synth(args) -> int:
    try:
        state = _load_state(args.file)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.real and state.max_imag() > REAL_INPUT_TOL:
        print("error: --real requires real amplitudes", file=sys.stderr)
        return EXIT_MODE
    mode = "real" if args.real else "general"
    try:
        report = _synthesize(state, mode, args.prepare)
    except NotRealError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MODE
    except SynthesisInvariantError as exc:
        _dump_invariant(exc)
        return EXIT_INVARIANT

    if args.ry:
        try:
            text = emit_circuit(report.circuit, include_ry=True)
        except ValueError:
            text = emit_circuit(report.circuit) + "# ry unavailable: non-real local gates\n"
    else:
        text = emit_circuit(report.circuit)

    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT
    else:
        sys.stdout.write(text)
    if args.verify:
        flag = "true" if report.all_real else "false"
        print(f"cz={report.cz_count} fidelity={_fmt(report.fidelity)} all_real={flag}")
    return EXIT_OK


def _synthesize(state, mode: str, do_prepare: bool) -> SynthesisReport:
    if do_prepare:
        return prepare(state, mode)
    if isinstance(state, PureState2):
        return disentangle2(state)
    if mode == "real":
        return disentangle3_real(state)
    return disentangle3(state)


def _cmd_delta(args) -> int:
    try:
        state = _load_state(args.file)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if not isinstance(state, PureState3):
        print("error: delta requires a 3-qubit state file", file=sys.stderr)
        return EXIT_INPUT
    if state.max_imag() > REAL_INPUT_TOL:
        print("error: delta is defined only for real states", file=sys.stderr)
        return EXIT_MODE
    d = delta(state)
    if abs(d) <= DELTA_ZERO_BAND:
        print("delta~0 bound=3")
    else:
        print(f"delta={_fmt(d)} bound={3 if d >= 0 else 4}")
    return EXIT_OK


def _cmd_sweep(args) -> int:
    if args.n < 1:
        print("error: --n must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    hist: dict[int, int] = {}
    min_fidelity = 1.0
    max_gate_imag = 0.0
    negative = 0
    violations: list[str] = []
    for i in range(args.n):
        s = random_state((args.seed, i), real_only=args.real)
        bound = 3
        try:
            if args.real:
                d = delta(s)
                if d < 0:
                    negative += 1
                    bound = 4
                rep = disentangle3_real(s)
                max_gate_imag = max(max_gate_imag, rep.circuit.max_local_imag())
                if not rep.all_real:
                    violations.append(f"sample {i}: non-real gate")
            else:
                rep = disentangle3(s)
        except SynthesisInvariantError as exc:
            violations.append(f"sample {i}: invariant failure: {exc}")
            continue
        hist[rep.cz_count] = hist.get(rep.cz_count, 0) + 1
        min_fidelity = min(min_fidelity, rep.fidelity)
        if rep.cz_count > bound:
            violations.append(f"sample {i}: cz_count {rep.cz_count} exceeds bound {bound}")
        if rep.fidelity < FIDELITY_MIN:
            violations.append(f"sample {i}: fidelity {_fmt(rep.fidelity)} below bound")

    mode = "real" if args.real else "general"
    print(f"{'samples':<18}{args.n}")
    print(f"{'mode':<18}{mode}")
    print(f"{'seed':<18}{args.seed}")
    keys = sorted(hist)
    first = True
    for k in keys:
        label = "cz histogram" if first else ""
        print(f"{label:<18}{k}: {hist[k]}")
        first = False
    print(f"{'min fidelity':<18}{_fmt(min_fidelity)}")
    if args.real:
        print(f"{'delta<0 fraction':<18}{_fmt(negative / args.n)}")
        print(f"{'max gate imag':<18}{_fmt(max_gate_imag)}")
    print(f"{'violations':<18}{len(violations)}")
    if args.machine:
        fields = [
            f"samples={args.n}",
            f"mode={mode}",
            f"seed={args.seed}",
            "cz_hist=" + ",".join(f"{k}:{hist[k]}" for k in keys),
            f"min_fidelity={_fmt(min_fidelity)}",
        ]
        if args.real:
            fields.append(f"delta_negative_fraction={_fmt(negative / args.n)}")
            fields.append(f"max_gate_imag={_fmt(max_gate_imag)}")
        fields.append(f"violations={len(violations)}")
        print("machine " + " ".join(fields))
    for v in violations[:20]:
        print(f"violation: {v}", file=sys.stderr)
    return EXIT_INVARIANT if violations else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qprep3",
        description="Compile 2- and 3-qubit pure states into local + controlled-Z circuits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_synth = sub.add_parser("synth", help="synthesize a circuit for a state file")
    p_synth.add_argument("file", help="state file (4 or 8 '<re> <im>' lines)")
    p_synth.add_argument("--real", action="store_true", help="all-real gates (real input only)")
    p_synth.add_argument("--prepare", action="store_true", help="emit the |0..0> -> state circuit")
    p_synth.add_argument("--verify", action="store_true", help="print cz count and simulated fidelity")
    p_synth.add_argument("--ry", action="store_true", help="append RY angle lines for real gates")
    p_synth.add_argument("--out", help="write the circuit here instead of stdout")
    p_synth.set_defaults(func=_cmd_synth)

    p_sweep = sub.add_parser("sweep", help="randomized synthesis sweep with CZ/fidelity bounds")
    p_sweep.add_argument("--n", type=int, required=True, help="number of sampled states")
    p_sweep.add_argument("--seed", type=int, required=True, help="base RNG seed")
    p_sweep.add_argument("--real", action="store_true", help="sample real states, real-mode synthesis")
    p_sweep.add_argument("--machine", action="store_true", help="append a machine-readable summary line")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_delta = sub.add_parser("delta", help="print the real-state discriminant and its CZ bound")
    p_delta.add_argument("file", help="state file (8 '<re> <im>' lines, real)")
    p_delta.set_defaults(func=_cmd_delta)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
