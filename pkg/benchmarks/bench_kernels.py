#!/usr/bin/env python3
"""Compare the compiled gate kernels against the NumPy fallback.

Applies the same random gate sequence to the same statevector with both
backends and reports wall time per full pass, plus the speedup.

Usage: python3 benchmarks/bench_kernels.py [--qubits N] [--gates G] [--repeat R]
"""

import argparse
import time

import numpy as np

from vqsim import _kernels_np
from vqsim.gates import Gate, matrix_of

try:
    from vqsim import _kernels_c
except ImportError:
    _kernels_c = None


def random_gate_sequence(rng, n_qubits, n_gates):
    seq = []
    for _ in range(n_gates):
        if rng.random() < 0.7 or n_qubits < 2:
            kind = rng.choice(["H", "RX", "RY", "RZ"])
            wires = (int(rng.integers(n_qubits)),)
        else:
            kind = rng.choice(["CNOT", "IsingZZ"])
            wires = tuple(int(w) for w in rng.choice(n_qubits, 2, replace=False))
        params = () if kind in ("H", "CNOT") else (float(rng.uniform(0, 2 * np.pi)),)
        seq.append((wires, matrix_of(Gate(kind, tuple(range(len(wires))), params))))
    return seq


def run_pass(module, psi, n_qubits, sequence):
    for wires, u in sequence:
        if len(wires) == 1:
            module.apply_one_qubit(psi, n_qubits, wires[0], u)
        else:
            module.apply_two_qubit(psi, n_qubits, wires[0], wires[1], u)


def bench(module, n_qubits, sequence, repeat):
    base = np.zeros(2**n_qubits, dtype=np.complex128)
    base[0] = 1.0
    best = np.inf
    result = None
    for _ in range(repeat):
        psi = base.copy()
        t0 = time.perf_counter()
        run_pass(module, psi, n_qubits, sequence)
        best = min(best, time.perf_counter() - t0)
        result = psi
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--qubits", type=int, default=18)
    parser.add_argument("--gates", type=int, default=100)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    sequence = random_gate_sequence(
        np.random.default_rng(args.seed), args.qubits, args.gates
    )
    print(f"{args.qubits} qubits, {args.gates} gates, best of {args.repeat} passes")

    t_np, psi_np = bench(_kernels_np, args.qubits, sequence, args.repeat)
    print(f"  numpy fallback : {t_np * 1e3:9.2f} ms")

    if _kernels_c is None:
        print("  compiled       : extension not built")
        return

    t_c, psi_c = bench(_kernels_c, args.qubits, sequence, args.repeat)
    err = float(np.max(np.abs(psi_c - psi_np)))
    print(f"  compiled       : {t_c * 1e3:9.2f} ms")
    print(f"  speedup        : {t_np / t_c:9.2f}x  (max state deviation {err:.1e})")


if __name__ == "__main__":
    main()
