"""Hybrid classical-quantum binary classifier, trained framework-free.

Model: affine map 8 -> 4, angle embedding of the four outputs, two
entangling layers with trainable rotations, <Z_0> readout, logistic
squashing, binary cross-entropy loss.  Quantum parameters are
differentiated with the parameter-shift rule; the quantum layer's
sensitivity to its classical inputs uses central finite differences
(shift rules apply to gate parameters, not embedded data), and the
affine weights follow by the chain rule.  All parameters share one Adam
optimizer.
"""

from __future__ import annotations

import numpy as np

from ..exceptions import ValidationError
from ..gates import PauliZObs, Ref
from ..gradients import parameter_shift_grad
from ..optimizers import AdamConfig
from ..seeding import rng_from
from ..tape import CircuitTape, Device, Expval, execute
from ..templates import angle_embedding, basic_entangler_layers
from .loop import run_descent
from .trace import Trace

N_FEATURES = 8
N_WIRES = 4
N_LAYERS = 2
N_QPARAMS = N_LAYERS * N_WIRES
_INPUT_STEP = 1e-4  # finite-difference step for data sensitivity

_DEVICE = Device()
_QPARAM_REFS = [
    [Ref(layer * N_WIRES + i) for i in range(N_WIRES)] for layer in range(N_LAYERS)
]


def _head_tape(z) -> CircuitTape:
    gates = angle_embedding(z, range(N_WIRES)) + basic_entangler_layers(
        _QPARAM_REFS, range(N_WIRES)
    )
    return CircuitTape(N_WIRES, tuple(gates), Expval(PauliZObs(0)), n_params=N_QPARAMS)


def quantum_head(z, q_params) -> float:
    """<Z_0> after embedding the four classical activations."""
    return execute(_head_tape(z), _DEVICE, q_params)


def _head_with_grads(z, q_params):
    tape = _head_tape(z)
    q = execute(tape, _DEVICE, q_params)
    dq_dtheta = parameter_shift_grad(tape, q_params, _DEVICE)
    dq_dz = np.zeros(N_WIRES)
    for i in range(N_WIRES):
        zp, zm = np.array(z), np.array(z)
        zp[i] += _INPUT_STEP
        zm[i] -= _INPUT_STEP
        f_plus = execute(_head_tape(zp), _DEVICE, q_params)
        f_minus = execute(_head_tape(zm), _DEVICE, q_params)
        dq_dz[i] = (f_plus - f_minus) / (2.0 * _INPUT_STEP)
    return q, dq_dtheta, dq_dz


def _sigmoid(x):
    return 1.0 / (1.0 + np.exp(-x))


def _bce(p, y):
    eps = 1e-12
    return -(y * np.log(p + eps) + (1.0 - y) * np.log(1.0 - p + eps))


def _unflatten(flat):
    w = flat[: N_WIRES * N_FEATURES].reshape(N_WIRES, N_FEATURES)
    b = flat[N_WIRES * N_FEATURES : N_WIRES * N_FEATURES + N_WIRES]
    q = flat[N_WIRES * N_FEATURES + N_WIRES :]
    return w, b, q


def loss_and_grad(flat_params, X, y):
    """Mean BCE loss and its gradient over the full dataset."""
    w, b, q_params = _unflatten(np.asarray(flat_params, dtype=np.float64))
    n = len(X)
    loss = 0.0
    grad_w = np.zeros_like(w)
    grad_b = np.zeros(N_WIRES)
    grad_q = np.zeros(N_QPARAMS)
    for x, label in zip(X, y):
        z = w @ x + b
        qv, dq_dtheta, dq_dz = _head_with_grads(z, q_params)
        p = _sigmoid(qv)
        loss += _bce(p, label)
        dl_dq = p - label  # d BCE(sigmoid(q)) / dq
        grad_q += dl_dq * dq_dtheta
        dl_dz = dl_dq * dq_dz
        grad_w += np.outer(dl_dz, x)
        grad_b += dl_dz
    grad = np.concatenate([grad_w.reshape(-1), grad_b, grad_q]) / n
    return loss / n, grad


def make_separable_dataset(n_rows: int = 100, seed: int = 0):
    """Linearly separable synthetic rows: 8 features, 0/1 labels."""
    rng = rng_from(seed)
    direction = rng.standard_normal(N_FEATURES)
    direction /= np.linalg.norm(direction)
    X = rng.standard_normal((n_rows, N_FEATURES))
    margin = X @ direction
    y = (margin > 0).astype(np.float64)
    # push points away from the boundary so the classes separate cleanly
    X += 0.5 * np.outer(np.sign(margin), direction)
    return X, y


def init_params(seed: int = 0) -> np.ndarray:
    rng = rng_from(seed)
    w = 0.1 * rng.standard_normal((N_WIRES, N_FEATURES))
    b = np.zeros(N_WIRES)
    q = rng.uniform(0.0, 2.0 * np.pi, N_QPARAMS)
    return np.concatenate([w.reshape(-1), b, q])


def hybrid_train(
    X,
    y,
    epochs: int = 10,
    seed: int = 0,
    config=AdamConfig(stepsize=0.1),
) -> Trace:
    """Full-batch training; the trace records one loss per epoch."""
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if len(X) == 0:
        raise ValidationError("dataset is empty")
    if X.shape[1] != N_FEATURES:
        raise ValidationError(f"expected {N_FEATURES} features, got {X.shape[1]}")
    if epochs < 0:
        raise ValidationError("epochs must be >= 0")
    x0 = init_params(seed)
    records, flat, loss = run_descent(
        lambda p: loss_and_grad(p, X, y), x0, config, epochs
    )
    return Trace(
        experiment="hybrid",
        seed=seed,
        config={"optimizer": type(config).__name__, "stepsize": config.stepsize,
                "epochs": epochs, "rows": len(X)},
        iterations=records,
        final_params=[float(v) for v in flat],
        final_value=loss,
    )
