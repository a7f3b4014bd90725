"""Benchmark the compiled kernels against the pure-Python fallback.

Micro-benchmarks call both backends directly; the end-to-end synthesis sweep
re-runs this interpreter with QPREP3_PURE_PYTHON toggled so each measurement
uses the backend selected at import.

    python benchmarks/bench_kernels.py [--micro-reps N] [--sweep-n N]
"""
import argparse
import os
import subprocess
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

import numpy as np  # noqa: E402

from qprep3 import _kernels_py  # noqa: E402

try:
    from qprep3 import _kernels_c
except ImportError:
    _kernels_c = None


def bench_micro(reps: int) -> None:
    rng = np.random.default_rng(1)
    amps = rng.standard_normal(8) + 1j * rng.standard_normal(8)
    amps /= np.linalg.norm(amps)
    u = (0.6 + 0j, 0.8j, 0.8j, 0.6 + 0j)

    impls = [("python", _kernels_py)] + ([("cython", _kernels_c)] if _kernels_c else [])
    print(f"micro: {reps} apply_local + apply_cz rounds on 8 amplitudes")
    base = None
    for name, impl in impls:
        x = amps
        start = time.perf_counter()
        for _ in range(reps):
            x = impl.apply_local(x, 1, *u)
            x = impl.apply_cz(x, 0, 2)
        elapsed = time.perf_counter() - start
        rate = reps / elapsed
        note = ""
        if base is None:
            base = elapsed
        else:
            note = f"  ({base / elapsed:.2f}x vs python)"
        print(f"  {name:<8}{elapsed:8.3f}s  {rate:12.0f} rounds/s{note}")


def bench_sweep(n: int) -> None:
    print(f"sweep: disentangle3 on {n} random states (fresh interpreter per backend)")
    code = (
        "import sys, time; sys.path.insert(0, %r); "
        "from qprep3 import kernels, random_state, disentangle3; "
        "t = time.perf_counter(); "
        "[disentangle3(random_state((4242, i))) for i in range(%d)]; "
        "print(kernels.BACKEND, time.perf_counter() - t)"
    ) % (os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "src"), n)
    results = []
    for forced in ("1", ""):
        env = dict(os.environ)
        if forced:
            env["QPREP3_PURE_PYTHON"] = forced
        else:
            env.pop("QPREP3_PURE_PYTHON", None)
        out = subprocess.run(
            [sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True
        )
        backend, seconds = out.stdout.split()
        results.append((backend, float(seconds)))
    base = results[0][1]
    for backend, seconds in results:
        note = "" if seconds == base else f"  ({base / seconds:.2f}x vs python)"
        print(f"  {backend:<8}{seconds:8.3f}s  {n / seconds:10.0f} states/s{note}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--micro-reps", type=int, default=200000)
    parser.add_argument("--sweep-n", type=int, default=4000)
    args = parser.parse_args()
    if _kernels_c is None:
        print("note: compiled kernels not built (run `python setup.py build_ext --inplace`)")
    bench_micro(args.micro_reps)
    bench_sweep(args.sweep_n)


if __name__ == "__main__":
    main()
