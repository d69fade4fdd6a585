"""Circuit tape: ordered gate list plus a measurement specification.

Tapes are immutable after construction.  Parameter slots inside gates are
either literal floats or :class:`~vqsim.gates.Ref` indices into a flat
trainable vector; binding produces a concrete gate list.  Execution
results are plain values: a float for a single expectation, a 1-D array
for an expectation list or a probability measurement.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exceptions import CapacityError, ShapeError, ValidationError
from .gates import (
    Gate,
    HermitianObs,
    PauliProduct,
    PauliZObs,
    Ref,
    matrix_of,
    observable_wires,
)
from . import state as sv


@dataclass(frozen=True)
class Expval:
    obs: object


@dataclass(frozen=True)
class ExpvalList:
    observables: tuple

    def __post_init__(self):
        if not self.observables:
            raise ValidationError("ExpvalList must contain at least one observable")


@dataclass(frozen=True)
class Probs:
    wires: tuple


@dataclass(frozen=True)
class CircuitTape:
    n_qubits: int
    gates: tuple
    measurement: object
    n_params: int = -1  # -1: derive from the highest Ref index

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        max_ref = -1
        for g in self.gates:
            for w in g.wires:
                if not 0 <= w < self.n_qubits:
                    raise ValidationError(
                        f"wire {w} out of range for {self.n_qubits} qubits"
                    )
            for p in g.params:
                if isinstance(p, Ref):
                    max_ref = max(max_ref, p.index)
        if self.n_params < 0:
            object.__setattr__(self, "n_params", max_ref + 1)
        elif max_ref >= self.n_params:
            raise ValidationError(
                f"parameter reference {max_ref} exceeds declared count {self.n_params}"
            )
        if not isinstance(self.measurement, (Expval, ExpvalList, Probs)):
            raise ValidationError("tape needs an Expval, ExpvalList or Probs measurement")
        for obs in self.observables():
            for w in observable_wires(obs):
                if not 0 <= w < self.n_qubits:
                    raise ValidationError(f"observable wire {w} out of range")

    def observables(self):
        if isinstance(self.measurement, Expval):
            return (self.measurement.obs,)
        if isinstance(self.measurement, ExpvalList):
            return self.measurement.observables
        return ()


@dataclass
class Device:
    """Execution backend: exact analytic contraction, or shot sampling.

    ``shots=None`` selects analytic mode.  ``execution_count`` tallies
    circuit simulations for cost-accounting tests.
    """

    shots: int | None = None
    seed: int = 0
    max_qubits: int = sv.DEFAULT_MAX_QUBITS
    execution_count: int = field(default=0, compare=False)

    def __post_init__(self):
        if self.shots is not None and self.shots < 1:
            raise ValidationError(f"shots must be >= 1, got {self.shots}")

    @property
    def analytic(self) -> bool:
        return self.shots is None


def bind_params(tape: CircuitTape, params) -> list[Gate]:
    """Resolve every Ref slot against the flat parameter vector."""
    params = np.asarray(params, dtype=np.float64)
    if params.shape != (tape.n_params,):
        raise ShapeError(
            f"tape declares {tape.n_params} parameter(s), got {params.shape}"
        )
    bound = []
    for g in tape.gates:
        if any(isinstance(p, Ref) for p in g.params):
            resolved = tuple(
                float(params[p.index]) if isinstance(p, Ref) else float(p)
                for p in g.params
            )
            bound.append(Gate(g.kind, g.wires, resolved))
        else:
            bound.append(g)
    return bound


def simulate(n_qubits: int, gates) -> sv.Statevector:
    """Run a concrete gate list on |0...0> and return the final state."""
    psi = sv.init_zero(n_qubits)
    for g in gates:
        sv._apply_matrix_inplace(psi.amplitudes, n_qubits, matrix_of(g), g.wires)
    return psi


def _pauli_z_wires(obs):
    """Wires of a diagonal (Z-only) observable, or None."""
    if isinstance(obs, PauliZObs):
        return (obs.wire,)
    if isinstance(obs, PauliProduct) and all(p == "Z" for p, _ in obs.factors):
        return tuple(w for _, w in obs.factors)
    return None


def _measure_analytic(psi, measurement):
    if isinstance(measurement, Probs):
        return sv.probabilities(psi, measurement.wires)
    if isinstance(measurement, Expval):
        return sv.expectation(psi, measurement.obs)
    return np.array([sv.expectation(psi, o) for o in measurement.observables])


def _measure_shots(psi, measurement, device):
    rng_seed = device.seed
    if isinstance(measurement, Probs):
        counts = sv.sample(psi, measurement.wires, device.shots, rng_seed)
        k = len(measurement.wires)
        freq = np.zeros(2**k)
        for bits, c in counts.items():
            freq[int(bits, 2)] = c / device.shots
        return freq
    observables = (
        (measurement.obs,) if isinstance(measurement, Expval) else measurement.observables
    )
    z_wires = []
    for obs in observables:
        wires = _pauli_z_wires(obs)
        if wires is None:
            raise ValidationError(
                "shots-mode expectation supports Pauli-Z observables only"
            )
        z_wires.append(wires)
    # one full-register sample shared by every observable
    all_wires = tuple(range(psi.n_qubits))
    counts = sv.sample(psi, all_wires, device.shots, rng_seed)
    values = []
    for wires in z_wires:
        acc = 0.0
        for bits, c in counts.items():
            eig = 1.0
            for w in wires:
                eig *= 1.0 - 2.0 * int(bits[w])
            acc += eig * c
        values.append(acc / device.shots)
    if isinstance(measurement, Expval):
        return values[0]
    return np.array(values)


def execute_bound(n_qubits, gates, measurement, device: Device):
    """Simulate a concrete gate list and evaluate the measurement."""
    if n_qubits > device.max_qubits:
        raise CapacityError(
            f"{n_qubits} qubits exceeds device budget of {device.max_qubits}"
        )
    device.execution_count += 1
    psi = simulate(n_qubits, gates)
    if device.analytic:
        return _measure_analytic(psi, measurement)
    if isinstance(measurement, (Expval, ExpvalList)):
        for obs in (
            (measurement.obs,) if isinstance(measurement, Expval)
            else measurement.observables
        ):
            if isinstance(obs, HermitianObs):
                raise ValidationError(
                    "Hermitian observables are unsupported in shots mode"
                )
    return _measure_shots(psi, measurement, device)


def execute(tape: CircuitTape, device: Device, params=()):
    """Execute a tape with the given trainable parameters."""
    gates = bind_params(tape, params)
    return execute_bound(tape.n_qubits, gates, tape.measurement, device)
