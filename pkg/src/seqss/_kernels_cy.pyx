# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled gate kernels; signature- and arithmetic-compatible with
``_kernels_py`` so either implementation yields identical amplitudes."""

from libc.math cimport sqrt

IMPL = "cython"


def hadamard_inplace(double complex[::1] amps, Py_ssize_t q):
    cdef Py_ssize_t n = amps.shape[0]
    cdef Py_ssize_t step = (<Py_ssize_t> 1) << q
    cdef double inv = 1.0 / sqrt(2.0)
    cdef Py_ssize_t base, i
    cdef double complex a, b
    for base in range(0, n, 2 * step):
        for i in range(base, base + step):
            a = amps[i]
            b = amps[i + step]
            amps[i] = (a + b) * inv
            amps[i + step] = (a - b) * inv


def cnot_inplace(double complex[::1] amps, Py_ssize_t control, Py_ssize_t target):
    cdef Py_ssize_t n = amps.shape[0]
    cdef Py_ssize_t cbit = (<Py_ssize_t> 1) << control
    cdef Py_ssize_t tbit = (<Py_ssize_t> 1) << target
    cdef Py_ssize_t i, j
    cdef double complex tmp
    for i in range(n):
        if (i & cbit) and not (i & tbit):
            j = i | tbit
            tmp = amps[i]
            amps[i] = amps[j]
            amps[j] = tmp


def flip_oracle_inplace(double complex[::1] amps, unsigned long long phase_mask, Py_ssize_t out_qubit):
    cdef Py_ssize_t n = amps.shape[0]
    cdef Py_ssize_t obit = (<Py_ssize_t> 1) << out_qubit
    cdef Py_ssize_t i, j
    cdef unsigned long long x
    cdef double complex tmp
    for i in range(n):
        if i & obit:
            continue
        x = (<unsigned long long> i) & phase_mask
        x ^= x >> 32
        x ^= x >> 16
        x ^= x >> 8
        x ^= x >> 4
        x ^= x >> 2
        x ^= x >> 1
        if x & 1:
            j = i | obit
            tmp = amps[i]
            amps[i] = amps[j]
            amps[j] = tmp
