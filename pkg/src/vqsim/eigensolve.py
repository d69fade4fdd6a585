"""Cyclic Jacobi eigensolver for real symmetric matrices.

Kept free of numpy.linalg so it can serve as an independent oracle for
the variational and kernel checks.
"""

from __future__ import annotations

import numpy as np

from .exceptions import CapacityError, ValidationError


def jacobi_eigenvalues(a, tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """Ascending eigenvalues via cyclic Jacobi rotations.

    Sweeps rotate away each off-diagonal element in turn until the
    off-diagonal Frobenius norm drops below ``tol``.
    """
    a = np.array(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValidationError(f"matrix must be square, got {a.shape}")
    if np.max(np.abs(a - a.T)) > 1e-10:
        raise ValidationError("matrix is not symmetric within 1e-10")
    n = a.shape[0]
    for _ in range(max_sweeps):
        off = float(np.sqrt(max(np.sum(a**2) - np.sum(np.diag(a) ** 2), 0.0)))
        if off < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < tol / (n * n):
                    continue
                diff = a[q, q] - a[p, p]
                if abs(apq) < 1e-36 * abs(diff):
                    t = apq / diff
                else:
                    phi = diff / (2.0 * apq)
                    t = 1.0 / (abs(phi) + np.sqrt(phi * phi + 1.0))
                    if phi < 0.0:
                        t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                rot_p = c * a[:, p] - s * a[:, q]
                rot_q = s * a[:, p] + c * a[:, q]
                a[:, p], a[:, q] = rot_p, rot_q
                rot_p = c * a[p, :] - s * a[q, :]
                rot_q = s * a[p, :] + c * a[q, :]
                a[p, :], a[q, :] = rot_p, rot_q
    return np.sort(np.diag(a))


def exact_ground_energy(hamiltonian) -> float:
    """Minimum eigenvalue of a small real symmetric Hamiltonian."""
    h = np.asarray(hamiltonian, dtype=np.float64)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValidationError(f"matrix must be square, got {h.shape}")
    if h.shape[0] > 16:
        raise CapacityError(f"dimension {h.shape[0]} exceeds cap of 16")
    return float(jacobi_eigenvalues(h)[0])
