"""Convex-hull membership and hull disjointness with certificates.

Membership of q in conv{x_1..x_t} is the LP feasibility problem

    lambda >= 0,  sum(lambda) = 1,  sum(lambda_i x_i) = q,

solved by the phase-1 simplex kernel.  A feasible solve yields the convex
weights; an infeasible one yields a dual vector that turns into a strictly
separating halfspace.  Every certificate is re-verified against its own
invariants before being returned, so a sign error in the dual extraction
cannot produce a silently wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from ..geometry.halfspace import HalfSpace
from ._backend import BACKEND, phase1

DEFAULT_TOL = 1e-9

# certificate re-verification slack, per invariant
WEIGHT_FLOOR = -1e-12
WEIGHT_SUM_TOL = 1e-9
RECONSTRUCT_TOL = 1e-7
SEPARATION_MARGIN = 1e-12
SUPPORT_SLACK = 1e-9


class CertificateError(RuntimeError):
    """An LP answer failed its own re-verification (solver defect or degeneracy)."""


class Verdict(Enum):
    INSIDE = "inside"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class HullCertificate:
    """Verdict plus evidence: convex weights (inside) or a separator (outside).

    `infeasibility` is the phase-1 objective: the minimal total constraint
    violation over the convex-combination formulation (0 within tol means
    the query is in the hull).
    """

    verdict: Verdict
    weights: np.ndarray | None
    separator: HalfSpace | None
    infeasibility: float

    @property
    def inside(self) -> bool:
        return self.verdict is Verdict.INSIDE


def _check_points(points, q=None):
    P = np.asarray(points, dtype=float)
    if P.ndim != 2 or P.shape[0] < 1:
        raise ValueError("expected a nonempty (t, d) point array")
    if q is not None:
        qv = np.asarray(q, dtype=float).reshape(-1)
        if qv.shape[0] != P.shape[1]:
            raise ValueError(f"query dimension {qv.shape[0]} != point dimension {P.shape[1]}")
        return P, qv
    return P


def verify_certificate(cert: HullCertificate, points, q, tol: float = DEFAULT_TOL) -> None:
    """Re-check a certificate against the instance; raises CertificateError."""
    P, qv = _check_points(points, q)
    if cert.verdict is Verdict.INSIDE:
        w = cert.weights
        if w is None or w.shape != (P.shape[0],):
            raise CertificateError("inside certificate lacks weights")
        if w.min() < WEIGHT_FLOOR:
            raise CertificateError(f"negative convex weight {w.min()}")
        if abs(w.sum() - 1.0) > WEIGHT_SUM_TOL:
            raise CertificateError(f"weights sum to {w.sum()}, not 1")
        residual = np.max(np.abs(w @ P - qv))
        if residual > RECONSTRUCT_TOL:
            raise CertificateError(f"weighted sum misses the query by {residual}")
    else:
        sep = cert.separator
        if sep is None:
            raise CertificateError("outside certificate lacks a separator")
        if np.max(P @ sep.normal) > sep.offset + SUPPORT_SLACK:
            raise CertificateError("separator does not support the hull")
        if qv @ sep.normal <= sep.offset + SEPARATION_MARGIN:
            raise CertificateError("separator does not strictly separate the query")


def point_in_hull(points, q, tol: float = DEFAULT_TOL) -> HullCertificate:
    """Is q in the convex hull of the points?  Returns a verified certificate.

    Boundary queries resolve to inside: the hull is treated as closed, with
    tol bounding the accepted infeasibility.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    P, qv = _check_points(points, q)
    t, d = P.shape
    A = np.vstack([P.T, np.ones((1, t))])
    b = np.append(qv, 1.0)
    value, lam, y, _ = phase1(A, b, tol)
    if value <= tol:
        cert = HullCertificate(Verdict.INSIDE, lam, None, value)
    else:
        u_raw = y[:d]
        norm = float(np.linalg.norm(u_raw))
        if norm == 0.0:
            raise CertificateError("infeasible solve produced a zero dual direction")
        u = u_raw / norm
        # offset at the hull's extreme point makes the separator support the hull
        c = float(np.max(P @ u))
        cert = HullCertificate(Verdict.OUTSIDE, None, HalfSpace(u, c), value)
    verify_certificate(cert, P, qv, tol)
    return cert


def hulls_disjoint(a_points, b_points, tol: float = DEFAULT_TOL) -> tuple[bool, HalfSpace | None]:
    """Whether conv(A) and conv(B) are disjoint; a separator when they are.

    A common point of the hulls is a feasible point of

        mu, nu >= 0, sum(mu) = sum(nu) = 1, sum(mu_i a_i) - sum(nu_j b_j) = 0,

    so disjointness is exactly phase-1 infeasibility.  The returned separator
    {x : <u, x> >= c} contains conv(B) and strictly excludes conv(A).
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    PA = _check_points(a_points)
    PB = _check_points(b_points)
    if PA.shape[1] != PB.shape[1]:
        raise ValueError("point sets must share a dimension")
    d = PA.shape[1]
    na, nb = PA.shape[0], PB.shape[0]
    A = np.zeros((d + 2, na + nb))
    A[:d, :na] = PA.T
    A[:d, na:] = -PB.T
    A[d, :na] = 1.0
    A[d + 1, na:] = 1.0
    b = np.zeros(d + 2)
    b[d] = 1.0
    b[d + 1] = 1.0
    value, _, y, _ = phase1(A, b, tol)
    if value <= tol:
        return False, None
    u_raw = y[:d]
    norm = float(np.linalg.norm(u_raw))
    if norm == 0.0:
        raise CertificateError("infeasible solve produced a zero dual direction")
    # dual orientation puts conv(A) on the low side and conv(B) on the high side
    u = u_raw / norm
    hi_a = float(np.max(PA @ u))
    lo_b = float(np.min(PB @ u))
    if not hi_a < lo_b:
        raise CertificateError("separator failed to split the hulls")
    return True, HalfSpace(u, 0.5 * (hi_a + lo_b))
