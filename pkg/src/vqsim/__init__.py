"""vqsim: differentiable statevector simulator and variational toolkit."""

from .gates import Gate, HermitianObs, PauliProduct, PauliZObs, Ref
from .kernels import BACKEND
from .state import (
    Statevector,
    apply_gate,
    expectation,
    init_zero,
    probabilities,
    sample,
    set_amplitudes,
)
from .tape import CircuitTape, Device, Expval, ExpvalList, Probs, bind_params, execute
from .gradients import adjoint_grad, finite_diff_grad, parameter_shift_grad
from .optimizers import AdamConfig, AdamState, GDConfig, adam_step, gd_step

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Gate",
    "Ref",
    "PauliZObs",
    "PauliProduct",
    "HermitianObs",
    "Statevector",
    "init_zero",
    "set_amplitudes",
    "apply_gate",
    "probabilities",
    "expectation",
    "sample",
    "CircuitTape",
    "Device",
    "Expval",
    "ExpvalList",
    "Probs",
    "bind_params",
    "execute",
    "parameter_shift_grad",
    "finite_diff_grad",
    "adjoint_grad",
    "GDConfig",
    "AdamConfig",
    "AdamState",
    "gd_step",
    "adam_step",
]
