"""Brute-force shattering and VC dimension for halfspace ranges.

A subset S of a finite point set V is realizable by a closed halfspace
exactly when conv(S) and conv(V \\ S) are disjoint, so shattering reduces to
linear-separability LPs.  Everything here is exhaustive by design; the point
of these routines is to be obviously correct at small scale, not fast.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from ..lp.hull import DEFAULT_TOL, hulls_disjoint

MAX_POINTS = 20


def _as_points(V) -> np.ndarray:
    pts = np.asarray(V, dtype=float)
    if pts.ndim != 2 or pts.shape[0] < 1:
        raise ValueError("expected a nonempty (n, d) point array")
    if pts.shape[0] > MAX_POINTS:
        raise ValueError(f"brute force capped at {MAX_POINTS} points, got {pts.shape[0]}")
    return pts


def is_shattered(V, tol: float = DEFAULT_TOL) -> bool:
    """Whether every subset of V is cut out by some closed halfspace.

    The empty set and V itself are always realizable, and realizability of S
    is symmetric with its complement (hull disjointness is), so only splits
    with the first point on a fixed side are tested.
    """
    pts = _as_points(V)
    n = pts.shape[0]
    if n == 1:
        return True
    index = np.arange(n)
    for size in range(1, n):
        for subset in combinations(range(1, n), size - 1):
            left = np.array((0,) + subset)
            mask = np.zeros(n, dtype=bool)
            mask[left] = True
            disjoint, _ = hulls_disjoint(pts[mask], pts[index[~mask]], tol)
            if not disjoint:
                return False
    return True


def vc_dimension_halfspaces(V, tol: float = DEFAULT_TOL) -> int:
    """Largest cardinality of a shattered subset of V.

    Shattered sets are hereditary (every subset of a shattered set is
    shattered), so the search ascends by size and stops at the first size
    where no subset is shattered.
    """
    pts = _as_points(V)
    n = pts.shape[0]
    best = 0
    for size in range(1, n + 1):
        found = False
        for subset in combinations(range(n), size):
            if is_shattered(pts[list(subset)], tol):
                found = True
                break
        if not found:
            return best
        best = size
    return best
