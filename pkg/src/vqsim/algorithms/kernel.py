"""Quantum kernel: inner products of feature-map output distributions.

The feature map is a fixed 2-qubit circuit: RY(x1), RY(x2), CNOT, then
RY(x1), RY(x2) again.  K(x, x') is the dot product of the two 4-entry
probability vectors; rows are simulated once and reused across pairs.
"""

from __future__ import annotations

import numpy as np

from ..exceptions import ShapeError
from ..gates import Gate
from ..state import probabilities
from ..tape import simulate


def feature_map_gates(x1: float, x2: float) -> list[Gate]:
    return [
        Gate("RY", (0,), (float(x1),)),
        Gate("RY", (1,), (float(x2),)),
        Gate("CNOT", (0, 1), ()),
        Gate("RY", (0,), (float(x1),)),
        Gate("RY", (1,), (float(x2),)),
    ]


def feature_probs(x) -> np.ndarray:
    """4-entry output distribution of the feature map on one sample."""
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (2,):
        raise ShapeError(f"feature map takes 2 features, got shape {x.shape}")
    psi = simulate(2, feature_map_gates(x[0], x[1]))
    return probabilities(psi, (0, 1))


def quantum_kernel_matrix(X1, X2) -> np.ndarray:
    """K[i, j] = <p(X1[i]), p(X2[j])> over the feature-map distributions."""
    X1 = np.atleast_2d(np.asarray(X1, dtype=np.float64))
    X2 = np.atleast_2d(np.asarray(X2, dtype=np.float64))
    if X1.shape[1] != 2 or X2.shape[1] != 2:
        raise ShapeError("kernel inputs must have exactly 2 feature columns")
    p1 = np.stack([feature_probs(row) for row in X1])
    p2 = np.stack([feature_probs(row) for row in X2])
    return p1 @ p2.T
