"""Tape-fragment builders: data embeddings and the entangling layer.

Builders return gate lists; amplitude embedding writes the statevector
directly instead of synthesizing a preparation circuit.  Entries of the
entangler's parameter matrix may be floats or Ref placeholders, so the
same builder serves data encoding and trainable ansatz construction.
"""

from __future__ import annotations

import numpy as np

from .exceptions import ShapeError, ValidationError
from .gates import Gate
from .state import Statevector, set_amplitudes


def angle_embedding(x, wires, axis: str = "Y") -> list[Gate]:
    """One R_axis(x_i) rotation per feature; surplus wires stay untouched."""
    wires = tuple(wires)
    if axis not in ("X", "Y", "Z"):
        raise ValidationError(f"axis must be X, Y or Z, got {axis!r}")
    x = list(x)
    if len(x) > len(wires):
        raise ShapeError(f"{len(x)} features exceed {len(wires)} wires")
    return [Gate(f"R{axis}", (w,), (xi,)) for xi, w in zip(x, wires)]


def amplitude_embedding(
    x, wires, normalize: bool = False, pad_with_zeros: bool = False
) -> Statevector:
    """Statevector whose amplitudes encode ``x`` on ``len(wires)`` qubits."""
    wires = tuple(wires)
    n = len(wires)
    x = np.asarray(x, dtype=np.complex128)
    dim = 2**n
    if pad_with_zeros:
        if x.size > dim:
            raise ShapeError(f"{x.size} amplitudes exceed 2^{n}")
        x = np.concatenate([x, np.zeros(dim - x.size, dtype=np.complex128)])
    elif x.size != dim:
        raise ShapeError(f"expected {dim} amplitudes, got {x.size}")
    return set_amplitudes(n, x, normalize=normalize)


def basis_embedding(bits, wires) -> list[Gate]:
    """X on every wire whose bit is 1, preparing the basis state |bits>."""
    wires = tuple(wires)
    bits = list(bits)
    if len(bits) != len(wires):
        raise ShapeError(f"{len(bits)} bits for {len(wires)} wires")
    for b in bits:
        if b not in (0, 1):
            raise ValidationError(f"basis embedding needs 0/1 entries, got {b!r}")
    return [Gate("X", (w,), ()) for b, w in zip(bits, wires) if b == 1]


def iqp_embedding(x, wires) -> list[Gate]:
    """Hadamards, then RZ(x_i), then all-pairs IsingZZ(x_i * x_j)."""
    wires = tuple(wires)
    x = [float(v) for v in x]
    if len(x) != len(wires):
        raise ShapeError(f"{len(x)} features for {len(wires)} wires")
    gates = [Gate("H", (w,), ()) for w in wires]
    gates += [Gate("RZ", (w,), (xi,)) for xi, w in zip(x, wires)]
    for i in range(len(wires)):
        for j in range(i + 1, len(wires)):
            gates.append(Gate("IsingZZ", (wires[i], wires[j]), (x[i] * x[j],)))
    return gates


def basic_entangler_layers(params, wires, rotation: str = "RY") -> list[Gate]:
    """Per layer: one rotation per wire, then a ring of CNOTs.

    ``params`` is an (L, n) matrix whose entries may be floats or Ref
    placeholders.  The ring closes wire n-1 -> wire 0 except at n=2,
    where the second CNOT would undo the first.
    """
    wires = tuple(wires)
    n = len(wires)
    if rotation not in ("RX", "RY", "RZ"):
        raise ValidationError(f"rotation must be RX, RY or RZ, got {rotation!r}")
    layers = [list(row) for row in params]
    for row in layers:
        if len(row) != n:
            raise ShapeError(f"layer has {len(row)} parameters for {n} wires")
    gates = []
    for row in layers:
        gates += [Gate(rotation, (w,), (p,)) for p, w in zip(row, wires)]
        if n == 2:
            gates.append(Gate("CNOT", (wires[0], wires[1]), ()))
        elif n > 1:
            for i in range(n):
                gates.append(Gate("CNOT", (wires[i], wires[(i + 1) % n]), ()))
    return gates
