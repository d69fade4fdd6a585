"""Pure-NumPy gate application kernels (fallback backend).

Both functions update ``amps`` in place.  Wire 0 is the most significant
bit of the basis index, so a C-order reshape to ``[2] * n`` puts wire w
on axis w.
"""

import numpy as np


def apply_one_qubit(amps, n_qubits, wire, u):
    tensor = amps.reshape([2] * n_qubits)
    out = np.tensordot(u, tensor, axes=([1], [wire]))
    out = np.moveaxis(out, 0, wire)
    amps[...] = out.reshape(-1)


def apply_two_qubit(amps, n_qubits, wire0, wire1, u):
    tensor = amps.reshape([2] * n_qubits)
    gate = u.reshape(2, 2, 2, 2)
    out = np.tensordot(gate, tensor, axes=([2, 3], [wire0, wire1]))
    out = np.moveaxis(out, [0, 1], [wire0, wire1])
    amps[...] = out.reshape(-1)
