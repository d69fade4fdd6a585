"""Seeded random tape generation for gradient cross-checks."""

from __future__ import annotations

import numpy as np

from .gates import Gate, PauliProduct, PauliZObs, Ref
from .tape import CircuitTape, Expval

_ONE_QUBIT = ("H", "X", "Y", "Z", "RX", "RY", "RZ")
_TWO_QUBIT = ("CNOT", "IsingZZ")


def random_tape(
    rng: np.random.Generator,
    max_qubits: int = 4,
    max_gates: int = 12,
    max_params: int = 8,
) -> tuple[CircuitTape, np.ndarray]:
    """Random catalogue circuit with a Pauli-Z expectation measurement.

    Each trainable parameter is referenced by exactly one gate, so the
    2-executions-per-parameter accounting of the shift rule holds.
    Returns (tape, parameter vector).
    """
    n_qubits = int(rng.integers(1, max_qubits + 1))
    n_gates = int(rng.integers(1, max_gates + 1))
    gates = []
    next_ref = 0
    for _ in range(n_gates):
        if n_qubits >= 2 and rng.random() < 0.3:
            kind = _TWO_QUBIT[rng.integers(len(_TWO_QUBIT))]
            w = rng.choice(n_qubits, size=2, replace=False)
            wires = (int(w[0]), int(w[1]))
        else:
            kind = _ONE_QUBIT[rng.integers(len(_ONE_QUBIT))]
            wires = (int(rng.integers(n_qubits)),)
        if kind in ("RX", "RY", "RZ", "IsingZZ"):
            if next_ref < max_params and rng.random() < 0.8:
                params = (Ref(next_ref),)
                next_ref += 1
            else:
                params = (float(rng.uniform(0, 2 * np.pi)),)
        else:
            params = ()
        gates.append(Gate(kind, wires, params))
    if n_qubits >= 2 and rng.random() < 0.5:
        w = rng.choice(n_qubits, size=2, replace=False)
        obs = PauliProduct((("Z", int(w[0])), ("Z", int(w[1]))))
    else:
        obs = PauliZObs(int(rng.integers(n_qubits)))
    tape = CircuitTape(n_qubits, tuple(gates), Expval(obs), n_params=next_ref)
    params = rng.uniform(0, 2 * np.pi, next_ref)
    return tape, params
