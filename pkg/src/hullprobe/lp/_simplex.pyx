# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Phase-1 simplex kernel, compiled pivot loop.

Shares the tableau setup and extraction with ``_simplex_py`` and mirrors its
pivot loop operation for operation; compiled with -ffp-contract=off so both
backends produce bit-identical floating-point results.
"""

import numpy as np

cimport cython
from libc.float cimport DBL_MAX
from libc.stdint cimport INT64_MAX, int64_t

from ._simplex_py import _build_tableau, _extract, _pivot_limit

BACKEND = "cython"


@cython.boundscheck(False)
@cython.wraparound(False)
cdef int64_t _pivot_loop(double[:, ::1] T, int64_t[::1] basis,
                         double tol, Py_ssize_t m, Py_ssize_t n,
                         int64_t limit) noexcept nogil:
    """Runs Bland pivots in place; returns the pivot count, or a negative code
    (-2 unbounded descent, -3 pivot guard exceeded)."""
    cdef Py_ssize_t width = n + m + 1
    cdef Py_ssize_t enter, leave, i, j, k, l
    cdef double best, r, coef, piv, f
    cdef int64_t best_basis, pivots = 0
    while True:
        enter = -1
        for j in range(n):
            if T[m, j] < -tol:
                enter = j
                break
        if enter < 0:
            return pivots
        leave = -1
        best = DBL_MAX
        best_basis = INT64_MAX
        for i in range(m):
            coef = T[i, enter]
            if coef > tol:
                r = T[i, width - 1] / coef
                if r < best or (r == best and basis[i] < best_basis):
                    best = r
                    leave = i
                    best_basis = basis[i]
        if leave < 0:
            return -2
        piv = T[leave, enter]
        for l in range(width):
            T[leave, l] = T[leave, l] / piv
        for k in range(m + 1):
            f = 0.0 if k == leave else T[k, enter]
            for l in range(width):
                T[k, l] = T[k, l] - f * T[leave, l]
        for k in range(m + 1):
            T[k, enter] = 0.0
        T[leave, enter] = 1.0
        basis[leave] = enter
        pivots += 1
        if pivots > limit:
            return -3


def phase1(A, b, double tol):
    """Compiled twin of ``_simplex_py.phase1``; same contract, same results."""
    A = np.ascontiguousarray(A, dtype=float)
    b = np.ascontiguousarray(b, dtype=float)
    if A.ndim != 2 or b.shape != (A.shape[0],):
        raise ValueError("A must be (m, n) with b of shape (m,)")
    cdef Py_ssize_t m = A.shape[0]
    cdef Py_ssize_t n = A.shape[1]
    T, basis, flip = _build_tableau(A, b)
    cdef double[:, ::1] Tv = T
    cdef int64_t[::1] bv = basis
    cdef int64_t limit = _pivot_limit(m, n)
    cdef int64_t pivots
    with nogil:
        pivots = _pivot_loop(Tv, bv, tol, m, n, limit)
    if pivots == -2:
        raise ArithmeticError("phase-1 simplex lost boundedness (numerical breakdown)")
    if pivots == -3:
        raise ArithmeticError("phase-1 simplex exceeded the pivot guard")
    value, x, y = _extract(T, basis, flip, m, n)
    return value, x, y, int(pivots)
