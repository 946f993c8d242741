"""Binomial proportion intervals.

Wilson score intervals are used everywhere a success probability is
estimated: unlike the Wald interval they behave correctly near proportion 1,
which is where the containment experiments live.
"""

from __future__ import annotations

from math import sqrt

# two-sided 99% normal quantile used throughout the experiment harness
Z99 = 2.576


def wilson_interval(successes: int, trials: int, z: float = Z99) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion.

    Returns (low, high) with 0 <= low <= successes/trials <= high <= 1.
    """
    if trials <= 0:
        raise ValueError("trials must be positive")
    if not 0 <= successes <= trials:
        raise ValueError("successes must lie in [0, trials]")
    p = successes / trials
    z2 = z * z
    denom = 1.0 + z2 / trials
    center = (p + z2 / (2.0 * trials)) / denom
    margin = (z / denom) * sqrt(p * (1.0 - p) / trials + z2 / (4.0 * trials * trials))
    # the exact interval always brackets p; clamp away last-ulp rounding so
    # downstream invariants can rely on low <= p <= high literally
    return min(max(0.0, center - margin), p), max(min(1.0, center + margin), p)
