"""Phase-1 simplex kernel, pure NumPy implementation.

Solves the feasibility problem

    find x >= 0 with A x = b

by minimizing the total artificial infeasibility with a dense full-tableau
simplex.  Bland's rule (smallest eligible entering index; ratio ties broken
by smallest basic variable) guarantees termination without cycling.

The compiled twin in ``_simplex.pyx`` mirrors this pivot loop operation for
operation (and is built without fused multiply-add), so both backends produce
the same pivots and the same floating-point results.  The tableau setup and
solution extraction live here and are shared by both.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def _build_tableau(A: np.ndarray, b: np.ndarray):
    """Full phase-1 tableau: [A' | I | b'] plus a reduced-cost row.

    Rows with negative right-hand side are negated so the all-artificial
    basis is feasible.  The last row holds the phase-1 reduced costs and, in
    its last cell, minus the current objective value (the total artificial
    infeasibility).  Column sums are accumulated row by row so the compiled
    and pure kernels round identically.
    """
    m, n = A.shape
    flip = b < 0.0
    Af = np.where(flip[:, None], -A, A)
    bf = np.where(flip, -b, b)
    T = np.zeros((m + 1, n + m + 1))
    T[:m, :n] = Af
    T[:m, n : n + m] = np.eye(m)
    T[:m, -1] = bf
    acc = np.zeros(n)
    rhs_sum = 0.0
    for i in range(m):
        acc -= Af[i]
        rhs_sum += bf[i]
    T[m, :n] = acc
    T[m, -1] = -rhs_sum
    basis = np.arange(n, n + m, dtype=np.int64)
    return T, basis, flip


def _extract(T: np.ndarray, basis: np.ndarray, flip: np.ndarray, m: int, n: int):
    """Objective value, primal point and dual vector from a final tableau."""
    value = -T[m, -1]
    x = np.zeros(n)
    structural = basis < n
    x[basis[structural]] = T[:m, -1][structural]
    # artificial columns started as the identity, so the reduced-cost row
    # under them is 1 - y; undo the row flips to recover the original dual
    y = 1.0 - T[m, n : n + m]
    y = np.where(flip, -y, y)
    return value, x, y


def _pivot_limit(m: int, n: int) -> int:
    # Bland's rule terminates; this only guards against tolerance-induced
    # stalling turning into a hang
    return 10_000 + 10 * (m + n)


def phase1(A, b, tol: float):
    """Minimize total artificial infeasibility of A x = b, x >= 0.

    Returns (value, x, y, pivots): the minimal infeasibility (0 within tol
    means feasible), a primal solution x, the dual vector y in original row
    coordinates (y @ A <= tol columnwise and y @ b = value at optimality),
    and the pivot count.
    """
    A = np.ascontiguousarray(A, dtype=float)
    b = np.ascontiguousarray(b, dtype=float)
    if A.ndim != 2 or b.shape != (A.shape[0],):
        raise ValueError("A must be (m, n) with b of shape (m,)")
    m, n = A.shape
    T, basis, flip = _build_tableau(A, b)
    limit = _pivot_limit(m, n)
    pivots = 0
    while True:
        negative = np.flatnonzero(T[m, :n] < -tol)
        if negative.size == 0:
            break
        enter = int(negative[0])
        col = T[:m, enter]
        rhs = T[:m, -1]
        leave = -1
        best = np.inf
        best_basis = np.iinfo(np.int64).max
        for i in range(m):
            if col[i] > tol:
                r = rhs[i] / col[i]
                if r < best or (r == best and basis[i] < best_basis):
                    best, leave, best_basis = r, i, basis[i]
        if leave < 0:
            raise ArithmeticError("phase-1 simplex lost boundedness (numerical breakdown)")
        piv = T[leave, enter]
        T[leave] = T[leave] / piv
        f = T[:, enter].copy()
        f[leave] = 0.0
        T -= np.outer(f, T[leave])
        T[:, enter] = 0.0
        T[leave, enter] = 1.0
        basis[leave] = enter
        pivots += 1
        if pivots > limit:
            raise ArithmeticError("phase-1 simplex exceeded the pivot guard")
    value, x, y = _extract(T, basis, flip, m, n)
    return value, x, y, pivots
