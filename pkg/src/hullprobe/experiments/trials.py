"""Containment trials: does the hull of t uniform points contain theta*K?

A trial samples t points, then checks every vertex of theta*K for hull
membership; for polytopes this is sufficient and necessary, since theta*K is
the hull of its scaled vertices.  A failed trial carries an explicit witness:
a halfspace supporting theta*K from outside whose cap contains none of the
sampled points, i.e. a cap of guaranteed measure that the sample missed.

Trials are independent tasks on counter-based streams keyed by
(seed, trial index), so estimates are bit-identical regardless of thread
count or completion order.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ..geometry.bodies import (
    ConvexBody,
    UnsupportedBodyError,
    contains_point,
    sample_uniform,
    support_function,
)
from ..geometry.halfspace import HalfSpace
from ..lp.hull import point_in_hull
from ..rng import stream
from ..stats import wilson_interval

MIN_TRIALS = 30


@dataclass(frozen=True)
class TrialOutcome:
    """Result of one containment check.

    On failure, `violated_vertex` is the vertex of the scaled body found
    outside the sample hull and `witness_cap` supports the scaled body from
    outside while containing no sampled point.
    """

    success: bool
    violated_vertex: np.ndarray | None = None
    witness_cap: HalfSpace | None = None

    def __post_init__(self):
        if self.success == (self.violated_vertex is not None):
            raise ValueError("exactly one of success / violated_vertex must hold")


def containment_check(body: ConvexBody, theta: float, sample) -> TrialOutcome:
    """Check theta*body ⊆ conv(sample) vertex by vertex.

    On the first vertex outside the hull, the LP separator is pushed outward
    to offset theta*h(u), turning it into the witness cap: every sampled
    point stays strictly below it, while it supports theta*body from outside.
    """
    if not body.is_polytopal:
        raise UnsupportedBodyError("containment checks need a vertex representation")
    if not 0.0 < theta < 1.0:
        raise ValueError("theta must lie in (0, 1)")
    pts = np.asarray(sample, dtype=float)
    if pts.ndim != 2 or pts.shape[0] < 1 or pts.shape[1] != body.dim:
        raise ValueError("sample must be a nonempty (t, d) array matching the body")
    for v in body.vertices:
        scaled = theta * v
        cert = point_in_hull(pts, scaled)
        if not cert.inside:
            u = cert.separator.normal
            cap = HalfSpace(u, theta * support_function(body, u))
            return TrialOutcome(False, violated_vertex=scaled, witness_cap=cap)
    return TrialOutcome(True)


def run_trial(body: ConvexBody, theta: float, t: int, rng: np.random.Generator) -> TrialOutcome:
    """Sample t points and run the containment check.

    Also re-checks that every sampled point lies in the body: the sample hull
    is then contained in the body by convexity, which is the right-hand
    inclusion of the guarantee.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    pts = sample_uniform(body, rng, size=t)
    if not np.all(contains_point(body, pts)):
        raise RuntimeError("sampler produced a point outside the body")
    return containment_check(body, theta, pts)


@dataclass(frozen=True)
class SuccessEstimate:
    """Monte Carlo estimate of the containment probability."""

    trials: int
    successes: int
    p_hat: float
    wilson_low: float
    wilson_high: float
    seed: int

    def __post_init__(self):
        if not self.wilson_low <= self.p_hat <= self.wilson_high:
            raise ValueError("confidence interval must bracket the point estimate")


def estimate_success_probability(
    body: ConvexBody,
    theta: float,
    t: int,
    n_trials: int,
    seed: int,
    threads: int | None = None,
) -> SuccessEstimate:
    """Run n_trials independent trials on streams (seed, 0..n_trials-1).

    The estimate depends only on (seed, configuration); threads only change
    how fast it arrives.
    """
    if n_trials < MIN_TRIALS:
        raise ValueError(f"need at least {MIN_TRIALS} trials")

    def one(index: int) -> bool:
        return run_trial(body, theta, t, stream(seed, index)).success

    if threads is not None and threads <= 1:
        outcomes = [one(i) for i in range(n_trials)]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(one, range(n_trials)))
    successes = sum(outcomes)
    low, high = wilson_interval(successes, n_trials)
    return SuccessEstimate(n_trials, successes, successes / n_trials, low, high, seed)


@dataclass(frozen=True)
class MinSampleSearch:
    """Result of the empirical sample-size search.

    `ratio` quantifies how conservative the theoretical bound is (>= 1 when
    the target is reachable).  `reached` is False when even t_bound points do
    not hit the target estimate; t_empirical then reports t_bound itself.
    """

    t_empirical: int
    t_bound: int
    ratio: float
    reached: bool
    trace: tuple[tuple[int, float], ...]


def empirical_min_t(
    body: ConvexBody,
    theta: float,
    target_p: float,
    n_trials: int,
    seed: int,
    threads: int | None = None,
) -> MinSampleSearch:
    """Smallest t whose estimated success probability reaches target_p.

    Binary search over [d+1, t_bound], where t_bound is the theoretical
    sample bound at delta = 1 - target_p.  Each probe runs n_trials trials on
    its own derived seed; estimates are monotone in t up to Monte Carlo
    noise, which is what makes the bisection meaningful.
    """
    from ..epsnet.bounds import min_valid_C, net_size
    from ..rng import derive_seed

    if not 0.0 < target_p < 1.0:
        raise ValueError("target_p must lie in (0, 1)")
    delta = 1.0 - target_p
    t_bound = net_size(body.dim, theta, min_valid_C(body.dim, theta, delta))
    trace: list[tuple[int, float]] = []

    def estimate(t: int) -> float:
        est = estimate_success_probability(
            body, theta, t, n_trials, derive_seed(seed, t), threads
        )
        trace.append((t, est.p_hat))
        return est.p_hat

    lo, hi = body.dim + 1, t_bound
    if estimate(hi) < target_p:
        return MinSampleSearch(t_bound, t_bound, 1.0, False, tuple(trace))
    while lo < hi:
        mid = (lo + hi) // 2
        if estimate(mid) >= target_p:
            hi = mid
        else:
            lo = mid + 1
    return MinSampleSearch(hi, t_bound, t_bound / hi, True, tuple(trace))
