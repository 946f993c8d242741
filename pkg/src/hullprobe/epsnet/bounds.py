"""Sample-size bound, constant conditions, and the failure tail bound.

The guarantee implemented here: t uniform points from a centered convex body
K in R^d contain theta*K in their convex hull with probability >= 1 - delta,
for

    t = ceil( C * (d+1) * e / (1-theta)^d * ln(e / (1-theta)^d) )

whenever C >= 2 satisfies  C^2 * ((1-theta)^d / e)^(C-2) <= (delta/4)^(1/(d+1)) / e^3.

This is the epsilon-net sample bound t = ceil(C * (D/eps) * ln(1/eps))
specialized to halfspace caps, with VC bound D = d+1 and minimal cap measure
eps = (1-theta)^d / e (the stability form of the centroid-cut inequality).

The epsilon-net form carries its own, weaker constant condition with e^2 in
place of e^3; `lemma_constant_check` exposes it separately, while NetBound
enforces the stronger e^3 version.  All exponentials are evaluated in log
space: (1-theta)^d underflows quickly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

_MAX_T = 2**63 - 1
_LOG_MAX_T = math.log(_MAX_T)

# condition RHS exponents: e^3 for the full bound, e^2 for the epsilon-net form
_THM_EXP = 3.0
_LEMMA_EXP = 2.0


def _validate_open_unit(name: str, x: float) -> float:
    x = float(x)
    if not 0.0 < x < 1.0:
        raise ValueError(f"{name} must lie in (0, 1), got {x!r}")
    return x


def epsilon_lower_bound(d: int, theta: float) -> float:
    """Minimal cap fraction (1-theta)^d / e cut off by a halfspace supporting theta*K."""
    if d < 1:
        raise ValueError("dimension must be >= 1")
    theta = _validate_open_unit("theta", theta)
    return math.exp(d * math.log1p(-theta) - 1.0)


def _log_condition_lhs(C: float, log_eps: float) -> float:
    return 2.0 * math.log(C) + (C - 2.0) * log_eps


def _constant_ok(C: float, log_eps: float, D: int, delta: float, rhs_exp: float) -> bool:
    rhs = math.log(delta / 4.0) / D - rhs_exp
    return _log_condition_lhs(C, log_eps) <= rhs


def thm_constant_check(d: int, theta: float, delta: float, C: float) -> bool:
    """Whether C^2 ((1-theta)^d/e)^(C-2) <= (delta/4)^(1/(d+1)) / e^3."""
    if C < 2.0:
        raise ValueError("C must be >= 2")
    theta = _validate_open_unit("theta", theta)
    delta = _validate_open_unit("delta", delta)
    log_eps = d * math.log1p(-theta) - 1.0
    return _constant_ok(C, log_eps, d + 1, delta, _THM_EXP)


def lemma_constant_check(C: float, epsilon: float, D: int, delta: float) -> bool:
    """Whether C^2 eps^(C-2) <= (delta/4)^(1/D) / e^2 (the epsilon-net form)."""
    if C < 2.0:
        raise ValueError("C must be >= 2")
    if D < 1:
        raise ValueError("D must be >= 1")
    delta = _validate_open_unit("delta", delta)
    if not 0.0 < epsilon < 1.0 / math.e:
        raise ValueError(f"epsilon must lie in (0, 1/e), got {epsilon!r}")
    return _constant_ok(C, math.log(epsilon), D, delta, _LEMMA_EXP)


def net_size_from_epsilon(epsilon: float, D: int, C: float) -> int:
    """t = ceil(C * (D/epsilon) * ln(1/epsilon)), overflow-guarded."""
    if C < 2.0:
        raise ValueError("C must be >= 2")
    if D < 1:
        raise ValueError("D must be >= 1")
    if not 0.0 < epsilon < 1.0 / math.e:
        raise ValueError(f"epsilon must lie in (0, 1/e), got {epsilon!r}")
    log_inv = -math.log(epsilon)
    log_t = math.log(C) + math.log(D) + log_inv + math.log(log_inv)
    if log_t > _LOG_MAX_T:
        raise OverflowError("sample bound exceeds 2^63 - 1")
    t = math.ceil(C * D * math.exp(log_inv) * log_inv)
    if t > _MAX_T:  # ceil near the guard line
        raise OverflowError("sample bound exceeds 2^63 - 1")
    return t


def net_size(d: int, theta: float, C: float) -> int:
    """t = ceil(C * (d+1) * e/(1-theta)^d * ln(e/(1-theta)^d))."""
    epsilon = epsilon_lower_bound(d, theta)
    if epsilon == 0.0:  # underflow: the true bound dwarfs 2^63 anyway
        raise OverflowError("sample bound exceeds 2^63 - 1")
    return net_size_from_epsilon(epsilon, d + 1, C)


def min_valid_C(d: int, theta: float, delta: float) -> float:
    """Smallest C >= 2 satisfying the e^3 constant condition, by bisection.

    The log of the condition, g(C) = 2 ln C + (C-2) ln eps - rhs, is strictly
    decreasing for C >= 2 whenever eps < 1/e (g'(C) = 2/C + ln eps <= 1 - 1 < 0),
    so bisection to absolute tolerance 1e-6 is valid.  The returned value
    itself satisfies the condition.
    """
    theta = _validate_open_unit("theta", theta)
    delta = _validate_open_unit("delta", delta)
    if d < 1:
        raise ValueError("dimension must be >= 1")
    log_eps = d * math.log1p(-theta) - 1.0
    assert log_eps < -1.0  # eps < 1/e holds for every theta in (0, 1)

    def ok(C: float) -> bool:
        return _constant_ok(C, log_eps, d + 1, delta, _THM_EXP)

    if ok(2.0):
        return 2.0
    hi = 4.0
    while not ok(hi):
        hi *= 2.0
        if hi > 1e9:  # g -> -inf, so this cannot happen for eps < 1/e
            raise AssertionError("constant condition unsatisfiable; monotonicity violated")
    lo = hi / 2.0 if hi > 4.0 else 2.0
    while hi - lo > 1e-6:
        mid = 0.5 * (lo + hi)
        if ok(mid):
            hi = mid
        else:
            lo = mid
    return hi


def failure_probability_bound(t: int, epsilon: float, D: int) -> float:
    """The tail bound e^2 * eps * t^2 / D^2 * exp(-eps*t/D), in log space.

    Callers compare the result against (delta/4)^(1/D): staying below it means
    the chance that t draws miss some cap of measure >= eps is below delta.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    if D < 1:
        raise ValueError("D must be >= 1")
    epsilon = _validate_open_unit("epsilon", epsilon)
    log_val = 2.0 + math.log(epsilon) + 2.0 * math.log(t) - 2.0 * math.log(D) - epsilon * t / D
    return math.exp(log_val)


@dataclass(frozen=True)
class NetBound:
    """A resolved parameter tuple (d, theta, delta, C, D, epsilon, t).

    Construction validates the whole chain: D = d+1, epsilon is the minimal
    cap fraction, C satisfies the e^3 constant condition, and t is the ceiled
    sample bound.  Use `resolve` to fill in the derived fields (and the
    minimal C when none is given).
    """

    d: int
    theta: float
    delta: float
    C: float
    D: int
    epsilon: float
    t: int

    def __post_init__(self):
        _validate_open_unit("theta", self.theta)
        _validate_open_unit("delta", self.delta)
        if self.d < 1:
            raise ValueError("dimension must be >= 1")
        if self.C < 2.0:
            raise ValueError("C must be >= 2")
        if self.D != self.d + 1:
            raise ValueError("D must equal d + 1")
        eps = epsilon_lower_bound(self.d, self.theta)
        if not math.isclose(self.epsilon, eps, rel_tol=1e-12, abs_tol=0.0):
            raise ValueError(f"epsilon must equal (1-theta)^d/e = {eps!r}")
        if not thm_constant_check(self.d, self.theta, self.delta, self.C):
            raise ValueError("C violates the constant condition for (d, theta, delta)")
        if self.t != net_size(self.d, self.theta, self.C):
            raise ValueError("t does not match the sample-size formula")

    @classmethod
    def resolve(cls, d: int, theta: float, delta: float, C: float | None = None) -> NetBound:
        if C is None:
            C = min_valid_C(d, theta, delta)
        return cls(
            d=d,
            theta=float(theta),
            delta=float(delta),
            C=float(C),
            D=d + 1,
            epsilon=epsilon_lower_bound(d, theta),
            t=net_size(d, theta, C),
        )
