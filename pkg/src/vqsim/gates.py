"""Gate and observable catalogue.

The vocabulary is closed: nine gate kinds and three observable variants
cover every circuit in this package.  Rotation convention is
``R(theta) = exp(-i * theta * G / 2)`` for generator G, so that
``<Z>`` after ``RY(theta)|0>`` equals ``cos(theta)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import ValidationError

SQRT2_INV = 1.0 / np.sqrt(2.0)

PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
PAULI = {"X": PAULI_X, "Y": PAULI_Y, "Z": PAULI_Z}

# arity and parameter count per gate kind
GATE_KINDS = {
    "H": (1, 0),
    "X": (1, 0),
    "Y": (1, 0),
    "Z": (1, 0),
    "RX": (1, 1),
    "RY": (1, 1),
    "RZ": (1, 1),
    "CNOT": (2, 0),
    "IsingZZ": (2, 1),
}

PARAMETERIZED_KINDS = ("RX", "RY", "RZ", "IsingZZ")

# generator matrices for the parameterized kinds (R = exp(-i*theta*G/2))
_GENERATORS = {
    "RX": PAULI_X,
    "RY": PAULI_Y,
    "RZ": PAULI_Z,
    "IsingZZ": np.kron(PAULI_Z, PAULI_Z),
}


@dataclass(frozen=True)
class Ref:
    """Reference into a flat trainable-parameter vector."""

    index: int


@dataclass(frozen=True)
class Gate:
    """A named gate on specific wires.

    ``params`` entries are floats for concrete gates; inside a circuit
    tape they may also be :class:`Ref` placeholders resolved at binding
    time.
    """

    kind: str
    wires: tuple
    params: tuple = ()

    def __post_init__(self):
        if self.kind not in GATE_KINDS:
            raise ValidationError(f"unknown gate kind {self.kind!r}")
        arity, n_params = GATE_KINDS[self.kind]
        if len(self.wires) != arity:
            raise ValidationError(
                f"{self.kind} acts on {arity} wire(s), got {len(self.wires)}"
            )
        if len(set(self.wires)) != len(self.wires):
            raise ValidationError(f"duplicate wires in {self.kind}: {self.wires}")
        if len(self.params) != n_params:
            raise ValidationError(
                f"{self.kind} takes {n_params} parameter(s), got {len(self.params)}"
            )


@dataclass(frozen=True)
class PauliZObs:
    """Single-wire Pauli-Z observable."""

    wire: int


@dataclass(frozen=True)
class PauliProduct:
    """Tensor product of Pauli factors, e.g. (("Z", 0), ("Z", 1))."""

    factors: tuple

    def __post_init__(self):
        wires = [w for _, w in self.factors]
        if len(set(wires)) != len(wires):
            raise ValidationError(f"duplicate wires in Pauli product: {wires}")
        for p, _ in self.factors:
            if p not in PAULI:
                raise ValidationError(f"unknown Pauli factor {p!r}")


@dataclass(frozen=True, eq=False)
class HermitianObs:
    """Explicit Hermitian matrix observable on a wire set."""

    matrix: np.ndarray
    wires: tuple

    def __post_init__(self):
        k = len(self.wires)
        m = np.asarray(self.matrix, dtype=np.complex128)
        if m.shape != (2**k, 2**k):
            raise ValidationError(
                f"Hermitian matrix on {k} wire(s) must be {2**k}x{2**k}, got {m.shape}"
            )
        if np.max(np.abs(m - m.conj().T)) > 1e-10:
            raise ValidationError("matrix is not Hermitian within 1e-10")
        object.__setattr__(self, "matrix", m)


def observable_wires(obs) -> tuple:
    if isinstance(obs, PauliZObs):
        return (obs.wire,)
    if isinstance(obs, PauliProduct):
        return tuple(w for _, w in obs.factors)
    if isinstance(obs, HermitianObs):
        return tuple(obs.wires)
    raise ValidationError(f"unknown observable {obs!r}")


def matrix_of(gate: Gate) -> np.ndarray:
    """Unitary matrix of a concrete gate (all params must be floats)."""
    k = gate.kind
    if k == "H":
        return SQRT2_INV * np.array([[1, 1], [1, -1]], dtype=np.complex128)
    if k in ("X", "Y", "Z"):
        return PAULI[k].copy()
    if k == "CNOT":
        # control = wires[0] (more significant gate bit), target = wires[1]
        return np.array(
            [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]],
            dtype=np.complex128,
        )
    theta = float(gate.params[0])
    c, s = np.cos(theta / 2.0), np.sin(theta / 2.0)
    if k == "RX":
        return np.array([[c, -1j * s], [-1j * s, c]], dtype=np.complex128)
    if k == "RY":
        return np.array([[c, -s], [s, c]], dtype=np.complex128)
    if k == "RZ":
        e = np.exp(-0.5j * theta)
        return np.array([[e, 0], [0, e.conjugate()]], dtype=np.complex128)
    if k == "IsingZZ":
        e = np.exp(-0.5j * theta)
        return np.diag([e, e.conjugate(), e.conjugate(), e]).astype(np.complex128)
    raise ValidationError(f"unknown gate kind {k!r}")


def adjoint_of(gate: Gate) -> Gate:
    """Gate whose matrix is the conjugate transpose of ``gate``'s.

    Rotations negate their angle; every non-parameterized catalogue gate
    is self-adjoint.
    """
    if gate.kind in PARAMETERIZED_KINDS:
        return Gate(gate.kind, gate.wires, (-float(gate.params[0]),))
    return gate


def shift_rule_of(gate: Gate):
    """Parameter-shift descriptor (shift, coefficient), or None.

    Every catalogue rotation generator has eigenvalues +-1, giving the
    two-term rule with shift pi/2 and coefficient 1/2.
    """
    if gate.kind in PARAMETERIZED_KINDS:
        return (np.pi / 2.0, 0.5)
    return None


def param_derivative_matrix(gate: Gate) -> np.ndarray:
    """dU/dtheta = -(i/2) * G * U for the catalogue rotations."""
    if gate.kind not in PARAMETERIZED_KINDS:
        raise ValidationError(f"{gate.kind} has no parameter")
    return -0.5j * _GENERATORS[gate.kind] @ matrix_of(gate)
