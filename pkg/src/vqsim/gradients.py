"""Gradients of tape executions: parameter-shift, finite differences, adjoint.

All three differentiate expectation-valued measurements with respect to
the tape's flat trainable vector.  Results are shaped ``(n_params,)`` for
a single expectation and ``(n_obs, n_params)`` for an expectation list.
Probability measurements are not differentiable here.
"""

from __future__ import annotations

import numpy as np

from .exceptions import UnsupportedGradientError
from .gates import (
    Gate,
    Ref,
    adjoint_of,
    matrix_of,
    param_derivative_matrix,
    shift_rule_of,
)
from .state import _apply_matrix_inplace, _apply_observable, init_zero
from .tape import CircuitTape, Device, Expval, Probs, bind_params, execute_bound


def _check_expval(tape: CircuitTape):
    if isinstance(tape.measurement, Probs):
        raise UnsupportedGradientError(
            "gradients of probability measurements are not supported"
        )


def _grad_shape(tape: CircuitTape):
    if isinstance(tape.measurement, Expval):
        return (tape.n_params,)
    return (len(tape.measurement.observables), tape.n_params)


def _ref_index(gate: Gate):
    for p in gate.params:
        if isinstance(p, Ref):
            return p.index
    return None


def parameter_shift_grad(tape: CircuitTape, params, device: Device) -> np.ndarray:
    """Exact gradient via the two-term shift rule.

    Each trainable gate occurrence is shifted independently, so a
    parameter referenced by several gates accumulates one two-point term
    per occurrence (the plain two-point rule is only valid per gate).
    With unique references this is exactly 2 executions per parameter.
    """
    _check_expval(tape)
    params = np.asarray(params, dtype=np.float64)
    bound = bind_params(tape, params)
    grad = np.zeros(_grad_shape(tape))
    for j, template in enumerate(tape.gates):
        ref = _ref_index(template)
        if ref is None:
            continue
        rule = shift_rule_of(template)
        if rule is None:
            raise UnsupportedGradientError(
                f"gate {template.kind} has no parameter-shift rule"
            )
        s, c = rule
        theta = bound[j].params[0]
        shifted = list(bound)
        shifted[j] = Gate(template.kind, template.wires, (theta + s,))
        f_plus = execute_bound(tape.n_qubits, shifted, tape.measurement, device)
        shifted[j] = Gate(template.kind, template.wires, (theta - s,))
        f_minus = execute_bound(tape.n_qubits, shifted, tape.measurement, device)
        grad[..., ref] += c * (np.asarray(f_plus) - np.asarray(f_minus))
    return grad


def finite_diff_grad(tape: CircuitTape, params, device: Device, h: float = 1e-6):
    """Central finite differences on the flat parameter vector."""
    _check_expval(tape)
    if h <= 0:
        raise ValueError(f"step must be positive, got {h}")
    params = np.asarray(params, dtype=np.float64)
    grad = np.zeros(_grad_shape(tape))
    for k in range(tape.n_params):
        shifted = params.copy()
        shifted[k] = params[k] + h
        f_plus = execute_bound(
            tape.n_qubits, bind_params(tape, shifted), tape.measurement, device
        )
        shifted[k] = params[k] - h
        f_minus = execute_bound(
            tape.n_qubits, bind_params(tape, shifted), tape.measurement, device
        )
        grad[..., k] = (np.asarray(f_plus) - np.asarray(f_minus)) / (2.0 * h)
    return grad


def adjoint_grad(tape: CircuitTape, params, device: Device | None = None):
    """Reverse-pass gradient from a single forward simulation.

    Forward-simulates once, then walks the tape backward undoing each
    gate and accumulating 2 * Re <lambda| dU/dtheta |psi> per trainable
    occurrence.  Cost is O(depth) statevector passes regardless of the
    parameter count.  Analytic expectations only.
    """
    _check_expval(tape)
    if device is not None:
        if not device.analytic:
            raise UnsupportedGradientError("adjoint gradients require an analytic device")
        if tape.n_qubits > device.max_qubits:
            raise UnsupportedGradientError(
                f"{tape.n_qubits} qubits exceeds device budget"
            )
        device.execution_count += 1
    params = np.asarray(params, dtype=np.float64)
    bound = bind_params(tape, params)
    n = tape.n_qubits

    psi = init_zero(n)
    for g in bound:
        _apply_matrix_inplace(psi.amplitudes, n, matrix_of(g), g.wires)

    observables = tape.observables()
    lams = [_apply_observable(psi, obs) for obs in observables]
    grad = np.zeros((len(observables), tape.n_params))

    for j in range(len(bound) - 1, -1, -1):
        g = bound[j]
        u_dag = matrix_of(adjoint_of(g))
        _apply_matrix_inplace(psi.amplitudes, n, u_dag, g.wires)
        ref = _ref_index(tape.gates[j])
        if ref is not None:
            mu = psi.amplitudes.copy()
            _apply_matrix_inplace(mu, n, param_derivative_matrix(g), g.wires)
            for i, lam in enumerate(lams):
                grad[i, ref] += 2.0 * np.vdot(lam, mu).real
        for lam in lams:
            _apply_matrix_inplace(lam, n, u_dag, g.wires)

    if isinstance(tape.measurement, Expval):
        return grad[0]
    return grad
