# cython: boundscheck=False, wraparound=False, cdivision=True
"""Strided in-place gate application kernels (compiled backend).

Wire 0 is the most significant bit of the basis index, so wire w lives
at bit position n - 1 - w.  One-qubit gates touch amplitude pairs, two-
qubit gates touch quadruples; the full 2^n x 2^n unitary is never built.
"""

import numpy as np
cimport numpy as cnp


def apply_one_qubit(cnp.complex128_t[::1] amps, int n_qubits, int wire,
                    cnp.complex128_t[:, ::1] u):
    cdef Py_ssize_t b = n_qubits - 1 - wire
    cdef Py_ssize_t stride = 1 << b
    cdef Py_ssize_t count = 1 << (n_qubits - 1)
    cdef Py_ssize_t g, i0, i1
    cdef double complex a0, a1
    cdef double complex u00 = u[0, 0], u01 = u[0, 1]
    cdef double complex u10 = u[1, 0], u11 = u[1, 1]
    for g in range(count):
        i0 = ((g >> b) << (b + 1)) | (g & (stride - 1))
        i1 = i0 | stride
        a0 = amps[i0]
        a1 = amps[i1]
        amps[i0] = u00 * a0 + u01 * a1
        amps[i1] = u10 * a0 + u11 * a1


def apply_two_qubit(cnp.complex128_t[::1] amps, int n_qubits, int wire0,
                    int wire1, cnp.complex128_t[:, ::1] u):
    cdef Py_ssize_t p0 = n_qubits - 1 - wire0
    cdef Py_ssize_t p1 = n_qubits - 1 - wire1
    cdef Py_ssize_t lo = p0 if p0 < p1 else p1
    cdef Py_ssize_t hi = p0 if p0 > p1 else p1
    cdef Py_ssize_t count = 1 << (n_qubits - 2)
    cdef Py_ssize_t g, base, r, c
    cdef Py_ssize_t idx[4]
    cdef double complex a[4]
    cdef double complex acc
    for g in range(count):
        base = ((g >> lo) << (lo + 1)) | (g & ((1 << lo) - 1))
        base = ((base >> hi) << (hi + 1)) | (base & ((1 << hi) - 1))
        # gate index bit 1 = wire0 value, bit 0 = wire1 value
        idx[0] = base
        idx[1] = base | (1 << p1)
        idx[2] = base | (1 << p0)
        idx[3] = base | (1 << p0) | (1 << p1)
        for r in range(4):
            a[r] = amps[idx[r]]
        for r in range(4):
            acc = 0
            for c in range(4):
                acc = acc + u[r, c] * a[c]
            amps[idx[r]] = acc
