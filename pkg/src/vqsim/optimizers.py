"""Classical optimizers: plain gradient descent and Adam.

Both are pure step functions over explicit state; iteration loops live
in the callers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exceptions import ShapeError


@dataclass(frozen=True)
class GDConfig:
    stepsize: float = 0.4

    def __post_init__(self):
        if self.stepsize <= 0:
            raise ValueError(f"stepsize must be positive, got {self.stepsize}")


@dataclass(frozen=True)
class AdamConfig:
    stepsize: float = 0.1
    beta1: float = 0.9
    beta2: float = 0.999
    epsilon: float = 1e-8

    def __post_init__(self):
        if self.stepsize <= 0:
            raise ValueError(f"stepsize must be positive, got {self.stepsize}")
        if not 0 < self.beta1 < 1 or not 0 < self.beta2 < 1:
            raise ValueError("betas must lie in (0, 1)")
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")


@dataclass
class AdamState:
    step_count: int = 0
    m: np.ndarray = field(default_factory=lambda: np.zeros(0))
    v: np.ndarray = field(default_factory=lambda: np.zeros(0))


def _check_lengths(params, grad):
    params = np.asarray(params, dtype=np.float64)
    grad = np.asarray(grad, dtype=np.float64)
    if params.shape != grad.shape:
        raise ShapeError(f"params {params.shape} vs grad {grad.shape}")
    return params, grad


def gd_step(config: GDConfig, params, grad) -> np.ndarray:
    params, grad = _check_lengths(params, grad)
    return params - config.stepsize * grad


def adam_step(config: AdamConfig, state: AdamState, params, grad):
    """One Adam update with bias correction; returns (params, new state)."""
    params, grad = _check_lengths(params, grad)
    if state.step_count == 0 and state.m.size == 0:
        state = AdamState(0, np.zeros_like(params), np.zeros_like(params))
    if state.m.shape != params.shape:
        raise ShapeError(f"moment vectors {state.m.shape} vs params {params.shape}")
    t = state.step_count + 1
    m = config.beta1 * state.m + (1.0 - config.beta1) * grad
    v = config.beta2 * state.v + (1.0 - config.beta2) * grad**2
    m_hat = m / (1.0 - config.beta1**t)
    v_hat = v / (1.0 - config.beta2**t)
    new_params = params - config.stepsize * m_hat / (np.sqrt(v_hat) + config.epsilon)
    return new_params, AdamState(t, m, v)


def make_stepper(config):
    """Stateful closure mapping (params, grad) -> params for either optimizer."""
    if isinstance(config, GDConfig):
        return lambda params, grad: gd_step(config, params, grad)
    if isinstance(config, AdamConfig):
        state = AdamState()

        def step(params, grad):
            nonlocal state
            params, state = adam_step(config, state, params, grad)
            return params

        return step
    raise TypeError(f"unknown optimizer config {config!r}")
