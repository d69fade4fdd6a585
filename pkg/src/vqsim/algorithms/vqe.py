"""Variational eigensolver for a small molecular Hamiltonian.

Ansatz: RY on each of two wires, CNOT, RY on each wire again (four
trainable angles).  The energy landscape is minimized with plain
gradient descent by default; the Jacobi eigensolver provides the
independent ground-truth energy.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..exceptions import ValidationError
from ..gates import Gate, HermitianObs, Ref
from ..gradients import adjoint_grad
from ..optimizers import GDConfig
from ..seeding import rng_from, spawn_rngs
from ..tape import CircuitTape, Device, Expval, execute
from .loop import run_descent
from .trace import Trace

# two-qubit H2 model Hamiltonian (energy units arbitrary)
H2_HAMILTONIAN = np.array(
    [
        [-1.05, 0.0, 0.0, 0.18],
        [0.0, -0.81, 0.18, 0.0],
        [0.0, 0.18, -0.81, 0.0],
        [0.18, 0.0, 0.0, -1.05],
    ]
)


@dataclass(frozen=True, eq=False)
class VqeProblem:
    hamiltonian: np.ndarray = field(default_factory=lambda: H2_HAMILTONIAN.copy())

    def __post_init__(self):
        h = np.asarray(self.hamiltonian, dtype=np.float64)
        if h.shape != (4, 4):
            raise ValidationError(f"expected a 4x4 Hamiltonian, got {h.shape}")
        if np.max(np.abs(h - h.T)) > 1e-12:
            raise ValidationError("Hamiltonian must be symmetric within 1e-12")
        object.__setattr__(self, "hamiltonian", h)


def ansatz_tape(problem: VqeProblem) -> CircuitTape:
    gates = (
        Gate("RY", (0,), (Ref(0),)),
        Gate("RY", (1,), (Ref(1),)),
        Gate("CNOT", (0, 1), ()),
        Gate("RY", (0,), (Ref(2),)),
        Gate("RY", (1,), (Ref(3),)),
    )
    obs = HermitianObs(problem.hamiltonian.astype(np.complex128), (0, 1))
    return CircuitTape(2, gates, Expval(obs))


def vqe_run(
    problem: VqeProblem,
    config=GDConfig(stepsize=0.4),
    iterations: int = 300,
    init_params=None,
    seed: int = 0,
) -> Trace:
    if iterations < 1:
        raise ValidationError("iterations must be >= 1")
    tape = ansatz_tape(problem)
    device = Device()
    if init_params is None:
        init_params = rng_from(seed).uniform(0.0, 2.0 * np.pi, 4)

    def cost_grad(theta):
        return execute(tape, device, theta), adjoint_grad(tape, theta)

    records, x, energy = run_descent(cost_grad, init_params, config, iterations)
    return Trace(
        experiment="vqe",
        seed=seed,
        config={"optimizer": type(config).__name__, "stepsize": config.stepsize,
                "iterations": iterations},
        iterations=records,
        final_params=[float(v) for v in x],
        final_value=energy,
    )


def vqe_best_of(
    problem: VqeProblem,
    restarts: int = 5,
    config=GDConfig(stepsize=0.4),
    iterations: int = 300,
    seed: int = 0,
) -> Trace:
    """Best final energy over independent seeded restarts."""
    best = None
    for rng in spawn_rngs(seed, restarts):
        init = rng.uniform(0.0, 2.0 * np.pi, 4)
        trace = vqe_run(problem, config, iterations, init_params=init, seed=seed)
        if best is None or trace.final_value < best.final_value:
            best = trace
    best.config["restarts"] = restarts
    return best
