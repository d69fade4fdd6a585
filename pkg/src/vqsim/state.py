"""Dense statevector representation and primitive physics operations.

Basis convention: wire 0 is the most significant bit, so basis state
|b0 b1 ... b_{n-1}> maps to index sum_w b_w * 2^(n-1-w).  Printed
probability vectors are therefore ordered [00, 01, 10, 11].
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .exceptions import DegenerateInputError, ShapeError, ValidationError
from .gates import PAULI, HermitianObs, PauliProduct, PauliZObs

DEFAULT_MAX_QUBITS = 24


@dataclass
class Statevector:
    n_qubits: int
    amplitudes: np.ndarray

    def copy(self) -> "Statevector":
        return Statevector(self.n_qubits, self.amplitudes.copy())


def _check_wires(wires, n_qubits):
    wires = tuple(int(w) for w in wires)
    if len(set(wires)) != len(wires):
        raise ValidationError(f"duplicate wires {wires}")
    for w in wires:
        if not 0 <= w < n_qubits:
            raise ValidationError(f"wire {w} out of range for {n_qubits} qubits")
    return wires


def init_zero(n_qubits: int, max_qubits: int = DEFAULT_MAX_QUBITS) -> Statevector:
    """All-zeros computational basis state |0...0>."""
    if not 1 <= n_qubits <= max_qubits:
        raise ShapeError(f"n_qubits must be in [1, {max_qubits}], got {n_qubits}")
    amps = np.zeros(2**n_qubits, dtype=np.complex128)
    amps[0] = 1.0
    return Statevector(n_qubits, amps)


def set_amplitudes(n_qubits: int, amps, normalize: bool = False) -> Statevector:
    """Statevector with explicitly given amplitudes."""
    amps = np.asarray(amps, dtype=np.complex128)
    if amps.shape != (2**n_qubits,):
        raise ShapeError(
            f"expected {2**n_qubits} amplitudes for {n_qubits} qubits, got {amps.shape}"
        )
    norm = np.linalg.norm(amps)
    if normalize:
        if norm < 1e-12:
            raise DegenerateInputError("cannot normalize the zero vector")
        amps = amps / norm
    elif abs(norm - 1.0) > 1e-9:
        raise ValidationError(f"amplitudes not normalized (norm={norm})")
    return Statevector(n_qubits, amps.copy())


def _apply_matrix_inplace(amps, n_qubits, matrix, wires):
    """Apply a (not necessarily unitary) 2x2 or 4x4 matrix in place."""
    m = np.ascontiguousarray(matrix, dtype=np.complex128)
    if len(wires) == 1:
        kernels.apply_one_qubit(amps, n_qubits, wires[0], m)
    else:
        kernels.apply_two_qubit(amps, n_qubits, wires[0], wires[1], m)


def apply_gate(state: Statevector, unitary, wires) -> Statevector:
    """New statevector with ``unitary`` applied on ``wires``.

    Value semantics: the input state is left unmodified.
    """
    wires = _check_wires(wires, state.n_qubits)
    k = len(wires)
    if k not in (1, 2):
        raise ShapeError(f"only 1- and 2-qubit gates supported, got {k} wires")
    u = np.asarray(unitary, dtype=np.complex128)
    if u.shape != (2**k, 2**k):
        raise ShapeError(f"matrix on {k} wire(s) must be {2**k}x{2**k}, got {u.shape}")
    if np.max(np.abs(u @ u.conj().T - np.eye(2**k))) > 1e-10:
        raise ValidationError("matrix is not unitary within 1e-10")
    out = state.amplitudes.copy()
    _apply_matrix_inplace(out, state.n_qubits, u, wires)
    return Statevector(state.n_qubits, out)


def probabilities(state: Statevector, wires) -> np.ndarray:
    """Marginal distribution over ``wires`` in the given order."""
    wires = _check_wires(wires, state.n_qubits)
    if not wires:
        raise ValidationError("wires must be nonempty")
    n = state.n_qubits
    full = np.abs(state.amplitudes) ** 2
    if len(wires) == n and wires == tuple(range(n)):
        return full
    tensor = full.reshape([2] * n)
    drop = tuple(ax for ax in range(n) if ax not in wires)
    marg = tensor.sum(axis=drop)
    kept = sorted(wires)
    perm = [kept.index(w) for w in wires]
    return marg.transpose(perm).reshape(-1)


def _apply_observable(state: Statevector, obs) -> np.ndarray:
    """O|psi> as a raw amplitude array."""
    out = state.amplitudes.copy()
    n = state.n_qubits
    if isinstance(obs, PauliZObs):
        _check_wires((obs.wire,), n)
        _apply_matrix_inplace(out, n, PAULI["Z"], (obs.wire,))
    elif isinstance(obs, PauliProduct):
        _check_wires(tuple(w for _, w in obs.factors), n)
        for p, w in obs.factors:
            _apply_matrix_inplace(out, n, PAULI[p], (w,))
    elif isinstance(obs, HermitianObs):
        wires = _check_wires(obs.wires, n)
        _apply_matrix_inplace(out, n, obs.matrix, wires)
    else:
        raise ValidationError(f"unknown observable {obs!r}")
    return out


def expectation(state: Statevector, obs) -> float:
    """<psi|O|psi> for a catalogue observable."""
    val = np.vdot(state.amplitudes, _apply_observable(state, obs))
    if abs(val.imag) > 1e-10:
        raise ValidationError(
            f"expectation has imaginary residue {val.imag} (internal inconsistency)"
        )
    return float(val.real)


def sample(state: Statevector, wires, shots: int, seed: int) -> dict:
    """Shot counts over the marginal distribution of ``wires``.

    Returns a map from bitstring (wire order as given) to count.
    Identical seeds give identical counts.
    """
    if shots < 1:
        raise ValidationError(f"shots must be >= 1, got {shots}")
    probs = probabilities(state, wires)
    rng = np.random.default_rng(seed)
    counts = rng.multinomial(shots, probs / probs.sum())
    k = len(tuple(wires))
    return {
        format(i, f"0{k}b"): int(c) for i, c in enumerate(counts) if c > 0
    }
