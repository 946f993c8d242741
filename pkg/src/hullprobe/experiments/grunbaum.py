"""Cap-volume audits against the centroid-cut floors.

Any halfspace whose boundary passes through the centroid cuts off at least
1/e of a convex body's volume; a halfspace supporting theta*K from outside
still cuts off at least (1-theta)^d / e.  These are theorems, so an audit
that observes a genuine violation indicates a defect in the kernel, not in
the mathematics: exact-mode violations are treated as build-failing events
by the callers.

2D polytopal bodies are audited exactly via polygon clipping; everything
else falls back to Monte Carlo, where a direction is flagged only when the
upper confidence limit falls below the floor (a theorem must not be
"violated" by sampling noise).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..geometry.bodies import (
    CapEstimate,
    ConvexBody,
    cap_fraction_mc,
    clip_fraction_exact_2d,
    supporting_halfspace,
)
from ..geometry.halfspace import HalfSpace


@dataclass(frozen=True)
class DirectionRecord:
    direction: np.ndarray
    fraction: float
    violation: bool
    estimate: CapEstimate | None = None  # present in Monte Carlo mode


@dataclass(frozen=True)
class GrunbaumAudit:
    theta: float
    floor: float
    exact: bool
    min_fraction: float
    violations: int
    records: tuple[DirectionRecord, ...]

    @property
    def n_directions(self) -> int:
        return len(self.records)


def cap_floor(d: int, theta: float) -> float:
    """(1-theta)^d / e; equals 1/e at theta = 0 (centroid cuts)."""
    if d < 1:
        raise ValueError("dimension must be >= 1")
    if not 0.0 <= theta < 1.0:
        raise ValueError("theta must lie in [0, 1)")
    return math.exp(d * math.log1p(-theta) - 1.0)


def random_unit_directions(d: int, n: int, rng: np.random.Generator) -> np.ndarray:
    g = rng.standard_normal((n, d))
    norms = np.linalg.norm(g, axis=1, keepdims=True)
    norms[norms == 0.0] = 1.0
    return g / norms


def grunbaum_audit(
    body: ConvexBody,
    theta: float,
    n_directions: int,
    n_mc: int,
    rng: np.random.Generator,
) -> GrunbaumAudit:
    """Measure the cap cut off by supporting halfspaces in random directions.

    theta = 0 audits halfspaces through the origin; theta in (0, 1) audits
    halfspaces supporting theta*body from outside.
    """
    if n_directions < 1:
        raise ValueError("need at least one direction")
    floor = cap_floor(body.dim, theta)
    exact = body.is_polytopal and body.dim == 2
    records = []
    for u in random_unit_directions(body.dim, n_directions, rng):
        if theta == 0.0:
            hs = HalfSpace(u, 0.0)
        else:
            hs = supporting_halfspace(body, u, theta)
        if exact:
            fraction = clip_fraction_exact_2d(body, hs)
            violation = fraction < floor
            records.append(DirectionRecord(u, fraction, violation))
        else:
            est = cap_fraction_mc(body, hs, n_mc, rng)
            violation = est.ci_high < floor
            records.append(DirectionRecord(u, est.fraction, violation, est))
    return GrunbaumAudit(
        theta=theta,
        floor=floor,
        exact=exact,
        min_fraction=min(r.fraction for r in records),
        violations=sum(r.violation for r in records),
        records=tuple(records),
    )
