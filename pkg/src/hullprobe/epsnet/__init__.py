from .bounds import (
    NetBound,
    epsilon_lower_bound,
    failure_probability_bound,
    lemma_constant_check,
    min_valid_C,
    net_size,
    net_size_from_epsilon,
    thm_constant_check,
)
from .shatter import MAX_POINTS, is_shattered, vc_dimension_halfspaces

__all__ = [
    "MAX_POINTS",
    "NetBound",
    "epsilon_lower_bound",
    "failure_probability_bound",
    "is_shattered",
    "lemma_constant_check",
    "min_valid_C",
    "net_size",
    "net_size_from_epsilon",
    "thm_constant_check",
    "vc_dimension_halfspaces",
]
