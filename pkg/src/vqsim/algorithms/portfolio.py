"""Variational portfolio optimization over a small asset universe.

Ansatz: one RY per asset wire followed by a CNOT chain.  Each step reads
<Z_i> per wire in one execution, maps them to simplex weights
w_i = ((z_i + 1) / 2) / sum, and minimizes
-(w . r - lambda * w^T Q w) with Q = lambda * I - R and r = diag(R).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..exceptions import DegenerateInputError, ValidationError
from ..gates import Gate, PauliZObs, Ref
from ..gradients import adjoint_grad
from ..optimizers import AdamConfig
from ..seeding import rng_from
from ..tape import CircuitTape, Device, ExpvalList, execute
from .loop import run_descent
from .trace import Trace

PAPER_RETURNS = np.array(
    [
        [0.10, 0.05, 0.08, 0.12],
        [0.05, 0.10, 0.06, 0.09],
        [0.08, 0.06, 0.10, 0.07],
        [0.12, 0.09, 0.07, 0.11],
    ]
)


@dataclass(frozen=True, eq=False)
class PortfolioProblem:
    returns: np.ndarray = field(default_factory=lambda: PAPER_RETURNS.copy())
    risk_aversion: float = 0.5

    def __post_init__(self):
        r = np.asarray(self.returns, dtype=np.float64)
        if r.ndim != 2 or r.shape[0] != r.shape[1]:
            raise ValidationError(f"returns matrix must be square, got {r.shape}")
        if self.risk_aversion < 0:
            raise ValidationError("risk_aversion must be >= 0")
        object.__setattr__(self, "returns", r)

    @property
    def n_assets(self) -> int:
        return self.returns.shape[0]


def qubo_matrix(problem: PortfolioProblem) -> np.ndarray:
    return problem.risk_aversion * np.eye(problem.n_assets) - problem.returns


def portfolio_tape(problem: PortfolioProblem) -> CircuitTape:
    n = problem.n_assets
    gates = [Gate("RY", (i,), (Ref(i),)) for i in range(n)]
    gates += [Gate("CNOT", (i, i + 1), ()) for i in range(n - 1)]
    observables = tuple(PauliZObs(i) for i in range(n))
    return CircuitTape(n, tuple(gates), ExpvalList(observables), n_params=n)


def weights_from_expectations(z) -> np.ndarray:
    raw = (np.asarray(z, dtype=np.float64) + 1.0) / 2.0
    total = raw.sum()
    if total < 1e-12:
        raise DegenerateInputError("portfolio weights collapsed to zero")
    return raw / total


def portfolio_optimize(
    problem: PortfolioProblem,
    config=AdamConfig(stepsize=0.1),
    iterations: int = 200,
    seed: int = 0,
    init_params=None,
) -> Trace:
    tape = portfolio_tape(problem)
    device = Device()
    n = problem.n_assets
    q = qubo_matrix(problem)
    r_vec = np.diag(problem.returns)
    lam = problem.risk_aversion
    if init_params is None:
        init_params = rng_from(seed).uniform(0.0, 2.0 * np.pi, n)

    def cost_grad(theta):
        z = execute(tape, device, theta)
        jac = adjoint_grad(tape, theta)  # (n_assets, n_params)
        raw = (np.asarray(z) + 1.0) / 2.0
        total = raw.sum()
        if total < 1e-12:
            raise DegenerateInputError("portfolio weights collapsed to zero")
        w = raw / total
        cost = -(w @ r_vec - lam * w @ q @ w)
        # chain rule through the normalization: dw_i/draw_j = (delta_ij - w_i) / total
        dc_dw = -(r_vec - lam * (q + q.T) @ w)
        dc_draw = (dc_dw - dc_dw @ w) / total
        dc_dz = 0.5 * dc_draw
        return cost, jac.T @ dc_dz

    records, theta, cost = run_descent(cost_grad, init_params, config, iterations)
    z_final = execute(tape, device, theta)
    weights = weights_from_expectations(z_final)
    return Trace(
        experiment="portfolio",
        seed=seed,
        config={"optimizer": type(config).__name__, "stepsize": config.stepsize,
                "iterations": iterations, "risk_aversion": lam},
        iterations=records,
        final_params=[float(v) for v in theta],
        final_value=cost,
        extra={"weights": [float(w) for w in weights]},
    )
