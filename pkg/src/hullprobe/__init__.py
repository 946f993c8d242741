"""hullprobe: random-polytope approximation of centered convex bodies.

Sample t uniform points from a centered convex body K, test whether their
convex hull contains theta*K, and compare the observed success probability
against the explicit sample-size bound t(d, theta, delta, C) — together
with the supporting machinery: the centroid-cut (Grünbaum) stability floor,
the epsilon-net sample bound with explicit constants, LP hull-membership
certificates, and brute-force VC-dimension checks.
"""

from .epsnet import (
    NetBound,
    epsilon_lower_bound,
    failure_probability_bound,
    is_shattered,
    lemma_constant_check,
    min_valid_C,
    net_size,
    net_size_from_epsilon,
    thm_constant_check,
    vc_dimension_halfspaces,
)
from .experiments import (
    GrunbaumAudit,
    MinSampleSearch,
    SuccessEstimate,
    TrialOutcome,
    cap_floor,
    containment_check,
    empirical_min_t,
    estimate_success_probability,
    grunbaum_audit,
    run_trial,
)
from .geometry import (
    BodyKind,
    CapEstimate,
    ConvexBody,
    HalfSpace,
    UnsupportedBodyError,
    ball,
    body_from_spec,
    body_to_spec,
    cap_fraction_mc,
    centered_simplex,
    centroid,
    clip_fraction_exact_2d,
    contains_point,
    convex_hull_2d,
    cross_polytope,
    cube,
    polygon2d,
    sample_uniform,
    support_function,
    supporting_halfspace,
    volume,
)
from .lp import BACKEND as LP_BACKEND
from .lp import CertificateError, HullCertificate, Verdict, hulls_disjoint, point_in_hull
from .rng import derive_seed, stream
from .stats import Z99, wilson_interval

__version__ = "0.1.0"

__all__ = [
    "BodyKind",
    "CapEstimate",
    "CertificateError",
    "ConvexBody",
    "GrunbaumAudit",
    "HalfSpace",
    "HullCertificate",
    "LP_BACKEND",
    "MinSampleSearch",
    "NetBound",
    "SuccessEstimate",
    "TrialOutcome",
    "UnsupportedBodyError",
    "Verdict",
    "Z99",
    "ball",
    "body_from_spec",
    "body_to_spec",
    "cap_floor",
    "cap_fraction_mc",
    "centered_simplex",
    "centroid",
    "clip_fraction_exact_2d",
    "containment_check",
    "contains_point",
    "convex_hull_2d",
    "cross_polytope",
    "cube",
    "derive_seed",
    "empirical_min_t",
    "epsilon_lower_bound",
    "estimate_success_probability",
    "failure_probability_bound",
    "grunbaum_audit",
    "hulls_disjoint",
    "is_shattered",
    "lemma_constant_check",
    "min_valid_C",
    "net_size",
    "net_size_from_epsilon",
    "point_in_hull",
    "polygon2d",
    "run_trial",
    "sample_uniform",
    "stream",
    "support_function",
    "supporting_halfspace",
    "thm_constant_check",
    "vc_dimension_halfspaces",
    "volume",
    "wilson_interval",
]
